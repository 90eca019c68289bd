import pytest

from lieflag.classifier import load_database
from lieflag.errors import DatabaseFormatError
from lieflag.records import eval_expr, parse_records, serialize_records

MINIMAL = """
# a comment
record = W^n
case = SL
source = Thm4.1
item = 1
requires = n >= 2
dim = n
picard = 1
params = m ; m > 0
actions = 2
note = hello world
orbit = closed dim=n-1 ident=P^{n-1} note="zero section"
orbit = open dim=n
relation = op="blow-down" to="P^n" label="W^{(1)}"
"""


def test_round_trip_is_identity_on_shipped_db():
    records = load_database()
    assert parse_records(serialize_records(records)) == records


def test_round_trip_minimal_record():
    records = parse_records(MINIMAL)
    assert parse_records(serialize_records(records)) == records
    (rec,) = records
    assert rec.name == "W^n"
    assert rec.param_names == ("m",)
    assert rec.param_constraint == "m > 0"
    assert rec.orbits[0].note == "zero section"
    assert rec.relations[0].label == "W^{(1)}"


def test_record_predicates():
    (rec,) = parse_records(MINIMAL)
    assert rec.applies(2) and not rec.applies(1)
    assert rec.check_params({"m": 3}) and not rec.check_params({"m": 0})


@pytest.mark.parametrize(
    "mutation",
    [
        ("case = SL", "case = XX"),
        ("source = Thm4.1", "source = Thm9.9"),
        ("item = 1", ""),
        ("orbit = open dim=n", "orbit = open"),
        ("orbit = open dim=n", "orbit = sideways dim=n"),
        ("note = hello world", "oops = hello"),
    ],
)
def test_parse_rejects_malformed_records(mutation):
    old, new = mutation
    with pytest.raises(DatabaseFormatError):
        parse_records(MINIMAL.replace(old, new))


def test_parse_rejects_orphan_lines():
    with pytest.raises(DatabaseFormatError):
        parse_records("dim = n\n")
    with pytest.raises(DatabaseFormatError):
        parse_records("# only a comment\n")


def test_eval_expr():
    assert eval_expr("n - 1", {"n": 4}) == 3
    assert eval_expr("(p, q) != (0, 0)", {"p": 0, "q": 1}) is True
    assert eval_expr("p >= 0 and q >= 0", {"p": 1, "q": -1}) is False


@pytest.mark.parametrize(
    "expr",
    [
        "__import__('os')",
        "open('x')",
        "n.bit_length()",
        "[n for n in (1,)]",
        "'abc'",
        "k + 1",
        "n ** 9",
    ],
)
def test_eval_expr_rejects_unsafe_or_unknown(expr):
    with pytest.raises(DatabaseFormatError):
        eval_expr(expr, {"n": 4})
