"""One-off: compute every golden value the tests freeze. Not a test file."""

import sys

sys.path.insert(0, "src")

import richwords as rw

W1 = "123999322399932442399932255223993"
W2 = "123999599932239949"
W3 = "12145656547745656545656547874"
W4 = "12145656547874"
WF = "110101100110011"


def show(label, value):
    print(f"{label} = {value!r}")


# words
show("trim", rw.trim(rw.word("124135")).chars)
show("ltrim", rw.ltrim(rw.word("124135")).chars)
show("rtrim", rw.rtrim(rw.word("124135")).chars)
show("occ_w1_999", rw.occ(rw.word(W1), rw.word("999")))
show("lcp", rw.lcp(rw.word("123999"), rw.word("1239932")).chars)

# palindromes
show("lps_v1", rw.lps(rw.word("1239993223999324423999")).chars)
show("lps_v2", rw.lps(rw.word("1239995999")).chars)
show("lppp_closure", rw.lppp(rw.word("12399321")).chars)
show("pal_closure_12399", rw.pal_closure(rw.word("12399")).chars)

# extensions
show("std_ext1_12399", rw.std_ext(rw.word("12399")).chars)
show("std_ext3_12399", rw.std_ext(rw.word("12399"), 3).chars)
show("mse_ex1", rw.max_std_ext(rw.word(W1), rw.word("1239993223999324423999")).chars)
show("mse_ex2", rw.max_std_ext(rw.word(W2), rw.word("1239995999")).chars)

# flexed palindromes of WF
recs = rw.flexed_palindromes(rw.word(WF))
show("flexed_WF", [(r.palindrome.chars, r.position, r.replacement.chars) for r in recs])
show("spr_WF", rw.standard_replacement(rw.word(WF), rw.word("001100")).chars)
show("spr_123999", rw.standard_replacement(rw.word("123999"), rw.word("999")).chars)

# flexed palindromes of W1 (for the condition-5 rejection witness)
recs1 = rw.flexed_palindromes(rw.word(W1))
show("flexed_W1", [(r.palindrome.chars, r.position, r.replacement.chars) for r in recs1])

# check_reducible
out = rw.check_reducible(rw.word(W1), rw.word("999"))
show("gamma_w1_999", (type(out).__name__, getattr(out, "condition", None), str(out)))
out = rw.check_reducible(rw.word(W2), rw.word("999"))
show("gamma_w2_999", (type(out).__name__, getattr(out, "condition", None)))
out = rw.check_reducible(rw.word(W3), rw.word("656"))
show("gamma_w3_656", (type(out).__name__, getattr(out, "condition", None)))
out = rw.check_reducible(rw.word(W4), rw.word("656"))
show("gamma_w4_656", (type(out).__name__, getattr(out, "condition", None)))
out = rw.check_reducible(rw.word(W3), rw.word("545"))
show("gamma_w3_545", (type(out).__name__, getattr(out, "condition", None)))

# parse
for name, w, r in [("p1", W1, "999"), ("p2", W2, "999"), ("p3", W3, "656"), ("p4", W4, "656")]:
    t = rw.parse(rw.word(w), rw.word(r))
    show(name, (t.span.chars, t.forced.chars, t.tail.chars))

# reduced_prefix / reduced_word traces
for name, w, r in [("t1", W1, "999"), ("t2", W2, "999"), ("t3", W3, "656"), ("t4", W4, "656")]:
    res, tr = rw.reduced_word(rw.word(w), rw.word(r))
    show(name, {
        "case": tr.case.value,
        "maximal": tr.pair.maximal,
        "head": tr.head.chars,
        "complete_return": None if tr.complete_return is None else tr.complete_return.chars,
        "lead": None if tr.lead is None else tr.lead.chars,
        "replacement": None if tr.replacement is None else tr.replacement.chars,
        "closure_pick": None if tr.closure_pick is None else tr.closure_pick.chars,
        "reduced_prefix": tr.reduced_prefix.chars,
        "result": res.chars,
    })

# eliminate / ruo / mfp
show("ruo_010", rw.shortest_marked_factor(rw.word("010"), rw.word("0"), rw.word("0")).chars)
show("ruo_01_self", rw.shortest_marked_factor(rw.word("01"), rw.word("01"), rw.word("01")).chars)
for floor in (1, 2, 3, 4):
    show(f"mfp_w3_{floor}", rw.maximal_reducible(rw.word(W3), floor).chars)
for floor in (1, 2):
    show(f"mfp_w4_{floor}", rw.maximal_reducible(rw.word(W4), floor).chars)

for name, w, a, b in [
    ("elm1", "000000001011", "00", "11"),
    ("elm2", "000000010011", "000", "11"),
    ("elm3", W3, "121", "874"),
    ("elm4", W3, "121", "47874"),
]:
    res, tr = rw.eliminate(rw.word(w), rw.word(a), rw.word(b))
    show(name, {
        "final": res.chars,
        "iterations": tr.iterations,
        "initial": tr.initial.chars,
        "steps": [
            (st.before.chars, st.target.chars, st.after.chars) for st in tr.steps
        ],
    })

# bounds
for m, q in [(1, 1), (1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3)]:
    show(f"k_{m}_{q}", rw.flex_count_bound(m, q))
for n, q in [(1, 2), (2, 2), (3, 2), (1, 3)]:
    show(f"pcb_{n}_{q}", rw.pal_complexity_bound(n, q))
rep = rw.superword_length_bound(1, 2)
show("rep_1_2", rep.to_record())
rep = rw.superword_length_bound(1, 1)
show("rep_1_1", (rep.length_bound, rep.growth_bound))
from richwords.bounds import digit_count

rep = rw.superword_length_bound(2, 2)
show("rep_2_2", (digit_count(rep.length_bound), digit_count(rep.growth_bound),
                 rep.log10_length_bound))
rep = rw.superword_length_bound(4, 2)
show("rep_4_2", (rep.length_bound, rep.log10_length_bound))

# search
v = rw.find_common_superword(rw.word("00", 2), rw.word("11", 2))
show("search_00_11", (v.status.value, v.witness.chars, v.explored))
w = rw.word("0101", 2)
v = rw.find_common_superword(w, w)
show("search_self", (v.status.value, v.witness.chars, v.explored))
v = rw.find_common_superword(
    rw.word("00", 2), rw.word("11", 2), budget=rw.SearchBudget(2, 5)
)
show("search_exhausted", (v.status.value, v.witness, v.explored))

# enumeration counts
for q, n in [(2, 14), (3, 9), (1, 5)]:
    counts = {}
    for wd in rw.enumerate_rich(rw.EnumConfig(q, n)):
        counts[len(wd.chars)] = counts.get(len(wd.chars), 0) + 1
    show(f"counts_{q}_{n}", [counts.get(i, 0) for i in range(n + 1)])

# canonical counts
counts = {}
for wd in rw.enumerate_rich(rw.EnumConfig(2, 10, canonical=True)):
    counts[len(wd.chars)] = counts.get(len(wd.chars), 0) + 1
show("canon_2_10", [counts.get(i, 0) for i in range(11)])

# pal complexity profile
show("profile_WF", rw.pal_complexity_profile(rw.word(WF)))
