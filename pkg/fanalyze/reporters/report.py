"""The analysis report shared by every output format."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from fanalyze.config import OracleConfig
from fanalyze.errors import RankTooSmall
from fanalyze.geometry.complement import (
    ComplementAnalysis,
    boundary_cones,
    boundary_is_connected,
    complement_components,
)
from fanalyze.geometry.cone import Cone
from fanalyze.geometry.fan import Fan, is_smooth_fan
from fanalyze.services.hartogs import hartogs_verdict, obstruction_exponents


def cone_to_dict(cone: Cone) -> Dict[str, Any]:
    return {
        "rays": [list(r) for r in cone.rays],
        "lineality": [list(v) for v in cone.lineality_basis],
    }


@dataclass
class AnalysisReport:
    fan_valid: bool
    diagnostics: List[str] = field(default_factory=list)
    smooth: Optional[bool] = None
    smooth_cones: List[bool] = field(default_factory=list)
    complete: Optional[bool] = None
    complement: Optional[Dict[str, Any]] = None
    hartogs: Optional[Dict[str, Any]] = None
    oracles: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"fan_valid": self.fan_valid, "diagnostics": list(self.diagnostics)}
        if not self.fan_valid:
            return data
        data["smooth"] = self.smooth
        data["smooth_cones"] = list(self.smooth_cones)
        data["complete"] = self.complete
        data["complement"] = self.complement
        data["hartogs"] = self.hartogs
        if self.oracles is not None:
            data["oracles"] = self.oracles
        return data


def _complement_section(analysis: ComplementAnalysis) -> Dict[str, Any]:
    section = {
        "n": analysis.n,
        "components": [
            {
                "id": c.id,
                "region_count": len(c.region_ids),
                "concave": c.concave,
                "closure_dual": cone_to_dict(c.closure_dual),
            }
            for c in analysis.components
        ],
    }
    if analysis.n == 1:
        section["boundary_cone_count"] = len(boundary_cones(analysis.fan, analysis))
        section["boundary_connected"] = boundary_is_connected(analysis.fan, analysis)
    return section


def build_analysis_report(
    fan: Fan,
    degree_bound: Optional[int] = None,
    with_oracles: bool = False,
    oracle_config: Optional[OracleConfig] = None,
) -> AnalysisReport:
    """Run every analysis on a valid fan and collect the results.

    Obstruction exponents are included when a degree bound is given and the
    complement is connected.

    Raises:
        RankTooSmall: rank below 2
    """
    if fan.rank < 2:
        raise RankTooSmall(fan.rank)
    smoothness = is_smooth_fan(fan)
    analysis = complement_components(fan)
    verdict = hartogs_verdict(fan, analysis)

    hartogs: Dict[str, Any] = {"verdict": verdict.verdict.value, "basis": verdict.basis}
    if verdict.witness_component is not None:
        hartogs["witness_component"] = verdict.witness_component
    if verdict.h1c_trivial is not None:
        hartogs["h1c_trivial"] = verdict.h1c_trivial
    if degree_bound is not None and analysis.n == 1:
        obstruction = obstruction_exponents(fan, degree_bound, analysis)
        hartogs["bound"] = obstruction.bound
        hartogs["obstruction_exponents"] = [list(e) for e in obstruction.exponents]

    oracles = None
    if with_oracles:
        from fanalyze.services.oracles import oracle_report

        oracles = oracle_report(analysis, oracle_config)

    return AnalysisReport(
        fan_valid=True,
        smooth=smoothness.smooth,
        smooth_cones=list(smoothness.cone_flags),
        complete=not analysis.arrangement.outside_ids(),
        complement=_complement_section(analysis),
        hartogs=hartogs,
        oracles=oracles,
    )


def invalid_fan_report(diagnostics: List[str]) -> AnalysisReport:
    return AnalysisReport(fan_valid=False, diagnostics=list(diagnostics))
