"""Replay of a presentation simplification as a list of certified moves.

Moves (dictionaries, usually read from JSON):

``eliminate``      {"gen", "using"}: Tietze elimination of a generator.
``add_generator``  {"gen", "word", "label"}: new generator with relator gen = word.
``rewrite``        {"target", "rule", "lhs", "rhs"}: replace one occurrence of lhs by
                   rhs in a cyclic rotation of the target, where the rule relator is
                   conjugate to lhs rhs^-1 or its inverse.
``collect``        {"target", "rules", "order"}: repeated rewrites that swap adjacent
                   letters of commuting generators, using single commutator rules.
``delete``         {"target"}: drop a relator that is trivial or duplicates another.

Every rewrite carries a certificate old = (p lhs rhs^-1 p^-1) new that is checked
by free reduction, and the abelianization is compared after every move.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .presentation import (
    Presentation,
    Relator,
    TietzeError,
    abelianize,
    tietze_eliminate,
)
from .words import (
    canonical_cyclic,
    commutator,
    cyclic_reduce,
    format_word,
    free_reduce,
    inverse,
    mul,
    parse_word,
    same_relator,
)


class ScriptError(TietzeError):
    def __init__(self, step: int, move: dict, reason: str):
        super().__init__(f"step {step} ({move.get('op')}): {reason}")
        self.step = step
        self.move = move
        self.reason = reason


@dataclass
class StepRecord:
    step: int
    op: str
    detail: str
    certificates: int = 0


@dataclass
class ScriptResult:
    presentation: Presentation
    verdict: str
    steps: list = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"


TARGET_GENERATORS = ("alpha", "beta", "gamma")


def target_presentation(gens=TARGET_GENERATORS) -> list:
    a, b, c = (((g, 1),) for g in gens)
    return [commutator(a, b), commutator(a, c), commutator(b, c)]


def is_target_form(p: Presentation, gens=TARGET_GENERATORS) -> bool:
    if set(p.generators) != set(gens) or len(p.generators) != len(gens):
        return False
    have = sorted(canonical_cyclic(r.word) for r in p.relators)
    want = sorted(canonical_cyclic(w) for w in target_presentation(gens))
    return have == want


def _replace_relator(p: Presentation, label: str, word) -> Presentation:
    rels = tuple(Relator(r.label, cyclic_reduce(word)) if r.label == label else r for r in p.relators)
    return Presentation(p.generators, rels, p.definitions)


def certified_rewrite(old, rule_word, lhs, rhs, pos: int | None = None):
    """Replace lhs by rhs in some rotation of ``old``; returns the new word.

    The rule must be a cyclic conjugate of (lhs rhs^-1)^(+-1); the identity
    old = p (lhs rhs^-1) p^-1 new is verified before returning.
    """
    lhs, rhs = tuple(lhs), tuple(rhs)
    if not same_relator(rule_word, mul(lhs, inverse(rhs))):
        raise TietzeError(f"rule {format_word(rule_word)} does not certify "
                          f"{format_word(lhs)} -> {format_word(rhs)}")
    n, k = len(old), len(lhs)
    if k == 0:
        raise TietzeError("empty left-hand side")
    starts = [pos] if pos is not None else range(n)
    for s in starts:
        rot = old[s:] + old[:s]
        for i in range(0, n - k + 1):
            if rot[i:i + k] == lhs:
                prefix, suffix = rot[:i], rot[i + k:]
                new = free_reduce(prefix + rhs + suffix)
                # old is conjugate to rot; check rot = (prefix lhs rhs^-1 prefix^-1) new
                check = mul(prefix, lhs, inverse(rhs), inverse(prefix), new)
                if check != free_reduce(rot):
                    raise TietzeError("certificate failed")  # pragma: no cover
                return new
    raise TietzeError(f"{format_word(lhs)} does not occur in {format_word(old)}")


def _commuting_pairs(p: Presentation, labels):
    pairs = {}
    for lab in labels:
        w = canonical_cyclic(p.relator(lab).word)
        if len(w) != 4:
            raise TietzeError(f"rule {lab} is not a commutator of two generators")
        (a, e1), (b, e2) = w[0], w[1]
        cand = commutator(((a, 1),), ((b, 1),))
        if a == b or not same_relator(w, cand):
            raise TietzeError(f"rule {lab} is not a commutator of two generators")
        pairs[frozenset((a, b))] = lab
    return pairs


def collect(p: Presentation, target: str, rules, order=None):
    """Bubble letters of ``target`` into ``order`` using commutator rules.

    Returns (new word, number of certified swaps).
    """
    pairs = _commuting_pairs(p, rules)
    order = list(order or p.generators)
    rank = {g: i for i, g in enumerate(order)}
    word = cyclic_reduce(p.relator(target).word)
    swaps = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            (a, e), (b, f) = word[i], word[i + 1]
            if a != b and rank.get(a, len(order)) > rank.get(b, len(order)) and frozenset((a, b)) in pairs:
                rule = p.relator(pairs[frozenset((a, b))]).word
                lhs, rhs = ((a, e), (b, f)), ((b, f), (a, e))
                word = cyclic_reduce(certified_rewrite(word, rule, lhs, rhs, pos=0))
                swaps += 1
                changed = True
                break
    return word, swaps


def apply_move(p: Presentation, move: dict):
    op = move.get("op")
    if op == "eliminate":
        q = tietze_eliminate(p, move["gen"], move["using"])
        return _normalise(q), f"eliminate {move['gen']} using {move['using']}", 0
    if op == "add_generator":
        gen = move["gen"]
        if gen in p.generators:
            raise TietzeError(f"generator {gen} already present")
        word = parse_word(move["word"], p.generators)
        rel = Relator(move.get("label", f"def-{gen}"), mul(((gen, 1),), inverse(word)))
        q = Presentation(p.generators + (gen,), p.relators + (rel,), p.definitions)
        return q, f"add {gen} = {format_word(word)}", 0
    if op == "rewrite":
        target, rule = move["target"], move["rule"]
        if target == rule:
            raise TietzeError("a relator cannot certify its own rewrite")
        lhs = parse_word(move["lhs"], p.generators)
        rhs = parse_word(move["rhs"], p.generators)
        new = certified_rewrite(p.relator(target).word, p.relator(rule).word, lhs, rhs)
        return _replace_relator(p, target, new), f"rewrite {target} with {rule}", 1
    if op == "collect":
        targets = move["target"] if isinstance(move["target"], list) else [move["target"]]
        rules = move["rules"]
        total = 0
        for target in targets:
            if target in rules:
                raise TietzeError(f"relator {target} cannot be collected with itself")
            word, swaps = collect(p, target, rules, move.get("order"))
            p = _replace_relator(p, target, word)
            total += swaps
        return p, f"collect {', '.join(targets)} with {', '.join(rules)}", total
    if op == "delete":
        targets = move["target"] if isinstance(move["target"], list) else [move["target"]]
        for target in targets:
            word = cyclic_reduce(p.relator(target).word)
            others = [r for r in p.relators if r.label != target]
            if word and not any(same_relator(word, r.word) for r in others):
                raise TietzeError(f"relator {target} = {format_word(word)} is neither trivial "
                                  "nor a duplicate")
            p = Presentation(p.generators, tuple(others), p.definitions)
        return p, f"delete {', '.join(targets)}", 0
    raise TietzeError(f"unknown move {op!r}")


def _normalise(p: Presentation) -> Presentation:
    rels = tuple(Relator(r.label, cyclic_reduce(r.word)) for r in p.relators)
    return Presentation(p.generators, rels, p.definitions)


def verify_simplification(p: Presentation, script, target_gens=TARGET_GENERATORS) -> ScriptResult:
    """Apply ``script`` move by move; PASS iff the end result is the commutator presentation."""
    ab = abelianize(p)
    steps = []
    current = _normalise(p)
    for k, move in enumerate(script, 1):
        try:
            nxt, detail, certs = apply_move(current, move)
        except (TietzeError, KeyError) as exc:
            err = ScriptError(k, move, str(exc))
            return ScriptResult(current, "FAIL", steps, str(err))
        if abelianize(nxt) != ab:
            err = ScriptError(k, move, "abelianization changed")
            return ScriptResult(current, "FAIL", steps, str(err))
        current = nxt
        steps.append(StepRecord(k, move["op"], detail, certs))
    verdict = "PASS" if is_target_form(current, target_gens) else "FAIL"
    return ScriptResult(current, verdict, steps)
