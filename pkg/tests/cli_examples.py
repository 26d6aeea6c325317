"""Documented CLI invocations (also listed in the README)."""

from pathlib import Path

DATA = Path(__file__).parent / "data"

EXAMPLES = [
    ["parse", "--algebra", "mkw", "--format", "latex", "[1[2][3]]"],
    ["product", "--algebra", "shuffle", "1 2", "1"],
    ["coproduct", "--algebra", "mkw", "--degree", "3", "[1[2][3]]"],
    ["coproduct", "--algebra", "cefm", "[[[]][]]", "--format", "text"],
    ["graft", "--algebra", "mkw", "[1]", "[2[3]]"],
    ["graft", "--algebra", "bck", "--dual", "[]", "[[]]"],
    ["gl", "--algebra", "mkw", "[1]", "[2]"],
    ["antipode", "--algebra", "shuffle", "1 2"],
    ["substitute", "--algebra", "bck", "--degree", "4", "--rule", str(DATA / "rule_bck.json"), "[[]]"],
    ["translate", "--algebra", "mkw", "--degree", "4", "--rule", str(DATA / "rule_mkw.json"), "[1[1][2]] [2]"],
    ["coact", "--algebra", "bck", "[[[]][]]"],
    ["coact", "--algebra", "bck", "--translation", "[[[]][]]", "--format", "text"],
    ["coact", "--algebra", "mkw", "--alphabet", "1,2,3", "--oracle", "[1[3][2]]"],
    ["verify", "--suite", "hopf", "--algebra", "bck", "--degree", "4"],
    ["verify", "--suite", "cointeraction", "--algebra", "mkw", "--degree", "3", "--translation"],
    ["verify", "--suite", "translation", "--algebra", "bck", "--degree", "3", "--trials", "5"],
    ["verify", "--suite", "roughpath", "--degree", "4"],
    ["signature", "--path", str(DATA / "path.json"), "--degree", "3"],
    ["series", "--path", str(DATA / "path.json"), "--degree", "2", "--s", "0", "--t", "2"],
]
