"""Shipped infinite-profile fixtures and three-valued reducibility over symbolic profiles."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from ..relcore import ReductionKind
from .arithmetic import Cardinal
from .certificates import (
    BlockingCertificate,
    CertificateError,
    MatchCertificate,
    certificate_from_json,
    validate_blocking_certificate,
    validate_existence_certificate,
)
from .profiles import SymbolicProfile, check_condition

K = ReductionKind

# kinds decided outright by a counting condition, with the item number
EXACT_ITEMS = {
    K.REDUCTION: 1,
    K.EMBEDDING: 2,
    K.ISOMORPHISM: 4,
    K.FULL_REDUCTION: 6,
    K.INVARIANT_EMBEDDING: 7,
}
NECESSARY_ITEMS = {K.SURJECTIVE_REDUCTION: 3, K.INVARIANT_REDUCTION: 5}


@dataclass
class CertificateEntry:
    id: str
    source: str  # "E" or "F": the side the certificate maps from
    kind: ReductionKind
    certificate: MatchCertificate | BlockingCertificate
    tampered: tuple[ReductionKind, MatchCertificate | BlockingCertificate] | None = None

    @property
    def is_blocking(self) -> bool:
        return isinstance(self.certificate, BlockingCertificate)


@dataclass
class Fixture:
    name: str
    description: str
    E: SymbolicProfile
    F: SymbolicProfile
    certificates: list[CertificateEntry] = field(default_factory=list)
    conditions: list[dict] = field(default_factory=list)
    claims: list[dict] = field(default_factory=list)

    def oriented(self, source: str) -> tuple[SymbolicProfile, SymbolicProfile]:
        return (self.E, self.F) if source == "E" else (self.F, self.E)

    @classmethod
    def from_json(cls, data: dict) -> Fixture:
        certs = []
        for c in data.get("certificates", []):
            kind, cert = certificate_from_json(c["certificate"])
            tampered = certificate_from_json(c["tampered"]) if "tampered" in c else None
            certs.append(CertificateEntry(c["id"], c["source"], kind, cert, tampered))
        return cls(
            data["name"],
            data.get("description", ""),
            SymbolicProfile.from_json(data["E"]),
            SymbolicProfile.from_json(data["F"]),
            certs,
            data.get("conditions", []),
            data.get("claims", []),
        )


def validate(P_src: SymbolicProfile, P_dst: SymbolicProfile, kind: ReductionKind, cert) -> bool:
    if isinstance(cert, BlockingCertificate):
        return validate_blocking_certificate(P_src, P_dst, kind, cert)
    return validate_existence_certificate(P_src, P_dst, cert)


def accepts(P_src, P_dst, kind, cert) -> bool:
    try:
        return validate(P_src, P_dst, kind, cert)
    except CertificateError:
        return False


FIXTURE_NAMES = (
    "evens-vs-odds",
    "aleph0-blocks-1-vs-2",
    "singletons-plus-pair",
    "ladder-plus-aleph0",
    "limit-vs-successor-alephs",
)


def load_fixture(name_or_path: str) -> Fixture:
    if name_or_path in FIXTURE_NAMES:
        text = resources.files("eqred.data.fixtures").joinpath(f"{name_or_path}.json").read_text()
    else:
        with open(name_or_path) as fh:
            text = fh.read()
    return Fixture.from_json(json.loads(text))


def all_fixtures() -> list[Fixture]:
    return [load_fixture(n) for n in FIXTURE_NAMES]


def symbolic_decide(kind: ReductionKind, fixture: Fixture, source: str = "E") -> bool | None:
    """True / False when established, None when neither conditions nor certificates settle it."""
    if kind is K.FULL_EMBEDDING:
        direct = _from_certificates(kind, fixture, source)
        if direct is not None:
            return direct
        # full embedding from one side is surjective reducibility from the other
        return symbolic_decide(K.SURJECTIVE_REDUCTION, fixture, "F" if source == "E" else "E")
    P_src, P_dst = fixture.oriented(source)
    if kind in EXACT_ITEMS:
        return check_condition(EXACT_ITEMS[kind], P_src, P_dst).holds
    if not check_condition(NECESSARY_ITEMS[kind], P_src, P_dst).holds:
        return False
    return _from_certificates(kind, fixture, source)


def _from_certificates(kind, fixture, source) -> bool | None:
    P_src, P_dst = fixture.oriented(source)
    for entry in fixture.certificates:
        if entry.source != source or entry.kind is not kind:
            continue
        if accepts(P_src, P_dst, kind, entry.certificate):
            return not entry.is_blocking
    return None


def verify_fixture(fixture: Fixture) -> dict:
    """Re-check every stored condition value and certificate (and its tampered twin)."""
    report = {"name": fixture.name, "conditions": [], "certificates": [], "claims": fixture.claims, "ok": True}
    for cond in fixture.conditions:
        P_src, P_dst = fixture.oriented(cond["source"])
        verdict = check_condition(cond["item"], P_src, P_dst)
        ok = verdict.holds == cond["holds"]
        if ok and not verdict.holds and "kappa" in cond:
            ok = verdict.kappa == Cardinal.parse(cond["kappa"])
        report["conditions"].append({"expected": cond, "got": verdict.to_json(), "ok": ok})
        report["ok"] &= ok
    for entry in fixture.certificates:
        P_src, P_dst = fixture.oriented(entry.source)
        try:
            validate(P_src, P_dst, entry.kind, entry.certificate)
            accepted, why = True, None
        except CertificateError as exc:
            accepted, why = False, str(exc)
        row = {"id": entry.id, "kind": entry.kind.slug, "accepted": accepted, "rejection": why}
        ok = accepted
        if entry.tampered is not None:
            t_kind, t_cert = entry.tampered
            try:
                validate(P_src, P_dst, t_kind, t_cert)
                row["tampered_rejected"] = False
            except CertificateError as exc:
                row["tampered_rejected"] = True
                row["tampered_rejection"] = str(exc)
            ok = ok and row["tampered_rejected"]
        row["ok"] = ok
        report["certificates"].append(row)
        report["ok"] &= ok
    return report
