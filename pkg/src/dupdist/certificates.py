"""Replayable path certificates and their quadruple encoding.

A certificate is a root plus an ordered step list whose replay produces a
target string; it is the machine-checkable witness behind every distance
claim in this package.  Exact steps are stored as ``DupStep`` (no ball
index); approximate steps as ``ApproxDupStep`` whose ``j`` indexes the
inserted copy in the Hamming ball of radius ``floor(beta * l)`` around the
duplicated block.

JSON wire format::

    {"q": 2, "root": "0", "target": "0011", "beta": "1/1",
     "steps": [{"p": 0, "l": 1, "t": 0}, {"p": 0, "l": 2, "t": 0, "j": 3}]}

The compact text form for quadruple sequences is ``"p,l,t,j;p,l,t,j;..."``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .codec import ApproxDupStep, ball_rank, ball_size, ball_unrank
from .errors import CertificateError, DomainError
from .words import (
    BetaLike,
    DupStep,
    QString,
    as_beta,
    format_beta,
    hamming,
    is_root,
    parse_beta,
)

Step = DupStep | ApproxDupStep


@dataclass(frozen=True)
class PathCertificate:
    """A root, a step list and the target their replay must reproduce."""

    q: int
    root: QString
    steps: tuple[Step, ...]
    target: QString
    beta: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        object.__setattr__(self, "beta", as_beta(self.beta))

    def __len__(self) -> int:
        return len(self.steps)


def _apply_step(cur: QString, step: Step, beta: Fraction, index: int) -> QString:
    try:
        step.validate_for(len(cur))
    except DomainError as e:
        raise CertificateError(str(e), index) from None
    s = cur.symbols
    block = s[step.p:step.p + step.l]
    if isinstance(step, ApproxDupStep):
        radius = (beta.numerator * step.l) // beta.denominator
        if step.j >= ball_size(step.l, radius, cur.q):
            raise CertificateError(
                f"ball index {step.j} out of range for l={step.l}, radius={radius}",
                index,
            )
        copy = ball_unrank(QString(block, cur.q), radius, step.j).symbols
    else:
        copy = block
    e = step.p + step.l + step.t
    return QString(s[:e] + copy + s[e:], cur.q)


def replay_certificate(cert: PathCertificate) -> QString:
    """Replay the steps from the root; raises CertificateError on any violation."""
    if cert.root.q != cert.q or cert.target.q != cert.q:
        raise CertificateError("root/target alphabet differs from certificate q")
    if not is_root(cert.root):
        raise CertificateError(f"{cert.root} is not a root")
    cur = cert.root
    prev_len = len(cur)
    for idx, step in enumerate(cert.steps):
        cur = _apply_step(cur, step, cert.beta, idx)
        # lengths strictly increase along a replay and never pass the target
        if not prev_len < len(cur) <= len(cert.target):
            raise CertificateError(
                f"length {len(cur)} broke the increasing chain toward {len(cert.target)}",
                idx,
            )
        prev_len = len(cur)
    return cur


def check_certificate(cert: PathCertificate) -> str | None:
    """None when the certificate verifies, else a first-failure diagnostic."""
    try:
        result = replay_certificate(cert)
    except (CertificateError, DomainError) as e:
        return str(e)
    if result != cert.target:
        return f"replay produced {result}, target is {cert.target}"
    return None


def verify_certificate(cert: PathCertificate) -> bool:
    """True iff the root is valid, every step applies, and the replay hits the target."""
    return check_certificate(cert) is None


# ---------------------------------------------------------------------------
# Quadruple encoding (p, l, t, j)


def encode_path(cert: PathCertificate, beta: BetaLike) -> list[ApproxDupStep]:
    """Rewrite the certificate's steps as quadruples under the given beta.

    Every step, exact or approximate, becomes an ``ApproxDupStep`` whose
    ``j`` is the rank of the inserted copy inside the radius
    ``floor(beta * l)`` ball around the duplicated block.  Raises
    CertificateError when a copy falls outside that radius.
    """
    b = as_beta(beta)
    failure = check_certificate(cert)
    if failure is not None:
        raise CertificateError(f"cannot encode an invalid certificate: {failure}")
    quads: list[ApproxDupStep] = []
    cur = cert.root
    for idx, step in enumerate(cert.steps):
        block = QString(cur.symbols[step.p:step.p + step.l], cur.q)
        nxt = _apply_step(cur, step, cert.beta, idx)
        e = step.p + step.l + step.t
        copy = QString(nxt.symbols[e:e + step.l], cur.q)
        radius = (b.numerator * step.l) // b.denominator
        if hamming(block, copy) > radius:
            raise CertificateError(
                f"copy at distance {hamming(block, copy)} exceeds radius {radius} "
                f"allowed by beta={format_beta(b)}",
                idx,
            )
        quads.append(ApproxDupStep(step.p, step.l, step.t, ball_rank(block, radius, copy)))
        cur = nxt
    return quads


def decode_path(
    q: int, root: QString, steps: list[ApproxDupStep] | tuple[ApproxDupStep, ...],
    beta: BetaLike,
) -> QString:
    """Replay a quadruple sequence from a root, materialising copies by unranking."""
    b = as_beta(beta)
    if root.q != q:
        raise CertificateError(f"root alphabet {root.q} differs from q={q}")
    if not is_root(root):
        raise CertificateError(f"{root} is not a root")
    cur = root
    for idx, step in enumerate(steps):
        cur = _apply_step(cur, step, b, idx)
    return cur


def parse_quadruples(text: str) -> list[ApproxDupStep]:
    """Parse the compact ``"p,l,t,j;..."`` form (whitespace tolerated)."""
    out: list[ApproxDupStep] = []
    body = text.strip().strip(";")
    if not body:
        return out
    for part in body.split(";"):
        fields = [f.strip() for f in part.split(",")]
        if len(fields) != 4:
            raise DomainError(f"quadruple needs 4 fields 'p,l,t,j', got {part!r}")
        try:
            p, l, t, j = (int(f) for f in fields)
        except ValueError:
            raise DomainError(f"non-integer quadruple field in {part!r}") from None
        out.append(ApproxDupStep(p, l, t, j))
    return out


def format_quadruples(steps: list[ApproxDupStep] | tuple[ApproxDupStep, ...]) -> str:
    return ";".join(f"{s.p},{s.l},{s.t},{s.j}" for s in steps)


# ---------------------------------------------------------------------------
# JSON serialisation


def certificate_to_obj(cert: PathCertificate) -> dict:
    steps = []
    for step in cert.steps:
        d = {"p": step.p, "l": step.l, "t": step.t}
        if isinstance(step, ApproxDupStep):
            d["j"] = step.j
        steps.append(d)
    return {
        "q": cert.q,
        "root": str(cert.root),
        "target": str(cert.target),
        "beta": format_beta(cert.beta),
        "steps": steps,
    }


def certificate_from_obj(obj: dict) -> PathCertificate:
    try:
        q = int(obj["q"])
        root = QString.parse(obj["root"], q)
        target = QString.parse(obj["target"], q)
        beta = parse_beta(obj.get("beta", "0"))
        steps: list[Step] = []
        for d in obj["steps"]:
            if "j" in d and d["j"] is not None:
                steps.append(ApproxDupStep(int(d["p"]), int(d["l"]), int(d["t"]), int(d["j"])))
            else:
                steps.append(DupStep(int(d["p"]), int(d["l"]), int(d["t"])))
    except (KeyError, TypeError) as e:
        raise DomainError(f"malformed certificate object: {e!r}") from None
    return PathCertificate(q, root, tuple(steps), target, beta)


def certificate_dumps(cert: PathCertificate, indent: int | None = 2) -> str:
    return json.dumps(certificate_to_obj(cert), indent=indent)


def certificate_loads(text: str) -> PathCertificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DomainError(f"invalid certificate JSON: {e}") from None
    return certificate_from_obj(obj)
