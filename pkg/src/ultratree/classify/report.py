"""
Line-oriented rendering of classification reports and ray-or-hub witnesses

    cardinality: finite(4) | omega | uncountable
    separable: yes | no (witness: uncountable family <Type> -> <Child>, epsilon <e>)
    locally-finite: yes | no (witness: bounded cycle [<T1>, ...], rule <r>)
                        | no (witness: infinite star <Type> -> <Child>, rule <r>, epsilon <e>)
"""
from typing import List

from ultratree.classify.verdicts import (
    BoundedRayWitness,
    ClassificationReport,
    Hub,
    InfiniteWEpsWitness,
    KonigWitness,
    RayWitness,
)
from ultratree.core.textformat import format_number


def _type_list(names) -> str:
    return "[" + ", ".join(names) + "]"


def _separable_line(report: ClassificationReport) -> str:
    witness = report.separable.witness
    if witness is None:
        return "separable: yes"
    return (f"separable: no (witness: uncountable family {witness.parent} -> {witness.child}, "
            f"epsilon {format_number(witness.epsilon)})")


def _locally_finite_line(report: ClassificationReport) -> str:
    witness = report.locally_finite.witness
    if witness is None:
        return "locally-finite: yes"
    if isinstance(witness, BoundedRayWitness):
        rules = [rule.render() for rule in witness.rules]
        noun = "rule" if len(rules) == 1 else "rules"
        return (f"locally-finite: no (witness: bounded cycle {_type_list(witness.cycle)}, "
                f"{noun} {', '.join(rules)})")
    assert isinstance(witness, InfiniteWEpsWitness)
    return (f"locally-finite: no (witness: infinite star {witness.parent} -> {witness.child}, "
            f"rule {witness.rule.render()}, epsilon {format_number(witness.epsilon)})")


def format_report(report: ClassificationReport, certificates: bool = False) -> str:
    lines: List[str] = [
        f"cardinality: {report.cardinality}",
        _separable_line(report),
        _locally_finite_line(report),
    ]
    if certificates:
        lines.extend(f"certificate: family {c.parent} -> {c.child}: {c.count}, "
                     f"{'countable' if c.countable else 'uncountable'}"
                     for c in report.separable.checks)
        lines.extend(f"certificate: {line}" for line in report.locally_finite.certificate)
    return "\n".join(lines) + "\n"


def format_witness(witness: KonigWitness) -> str:
    if isinstance(witness, Hub):
        return f"hub: {witness.type_name} (count {witness.count})\n"
    if isinstance(witness, RayWitness):
        return f"ray: cycle {_type_list(witness.cycle)}\n"
    return f"neither: {witness.count}\n"
