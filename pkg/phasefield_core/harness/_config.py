import json
from dataclasses import asdict, dataclass, field, fields, replace
from typing import List, Optional, Tuple

from ..solver import SolveConfig
from ._ansatz import AnsatzSpec


@dataclass(frozen=True)
class GridSpec:
    """
    Grid of an experiment.

    Either ``shape`` fixes the node counts for every ε, or ``resolution`` sets
    the number of grid steps per ε. With ``refinement`` r the number of steps
    per εᵢ grows as resolution·(ε₀/εᵢ)^{r−1}, so r = 1 keeps h/ε fixed and
    r > 1 refines faster than ε shrinks.
    """

    box: Tuple[Tuple[float, float], ...] = ((-0.5, 0.5), (-0.5, 0.5))
    shape: Optional[Tuple[int, ...]] = None
    resolution: Optional[float] = 10.0
    refinement: float = 1.0

    def __post_init__(self):
        if len(self.box) not in (1, 2, 3):
            raise ValueError("Grids have one, two or three axes.")
        if self.shape is None and self.resolution is None:
            raise ValueError("Either `shape` or `resolution` is needed.")
        if self.shape is not None and len(self.shape) != len(self.box):
            raise ValueError("`shape` must have one entry per axis.")
        if self.resolution is not None and not self.resolution > 0:
            raise ValueError("`resolution` must be positive.")
        if not self.refinement >= 1:
            raise ValueError("`refinement` must be at least 1.")

    def spacing(self, eps, eps0):
        """
        Largest grid spacing at εᵢ = ``eps`` in a sweep starting at ``eps0``.
        """
        if self.shape is not None:
            return max((hi - lo) / (c - 1) for (lo, hi), c in zip(self.box, self.shape))
        steps = self.resolution * (eps0 / eps) ** (self.refinement - 1)
        return eps / steps

    def build(self, eps, eps0):
        from ..field import Grid

        if self.shape is not None:
            return Grid(self.box, self.shape)
        return Grid.from_spacing(self.box, self.spacing(eps, eps0))

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d["box"] = tuple(tuple(float(v) for v in b) for b in d["box"])
        if d.get("shape") is not None:
            d["shape"] = tuple(int(c) for c in d["shape"])
        return cls(**d)


@dataclass(frozen=True)
class DiagnosticsSpec:
    """
    Which diagnostics a sweep evaluates, and their parameters.

    Attributes
    ----------
    certify, diagnose, slicing : bool
        Stage toggles.
    battery : int
        Number of random test vector fields of the first variation.
    points : list, optional
        Monotonicity centres; the box centre by default.
    radii : list, optional
        Monotonicity radii; 4ε up to 90% of the distance to the boundary by
        default.
    levels : list
        Levels s of the bands {|u| ≤ s} compared with the reference surface.
    slice_level : float
        Level of the slice curves.
    fiber_directions : list, optional
        Reference points of the fiber classification, |pⱼ| = ½.
    fiber_center : tuple, optional
        Centre of the fiber disk; the box centre by default.
    fiber_radius : float
        Radius of the fiber disk.
    c1 : float, optional
        Energy bound.
    """

    certify: bool = True
    diagnose: bool = True
    slicing: bool = True
    battery: int = 10
    points: Optional[List[Tuple[float, ...]]] = None
    radii: Optional[List[float]] = None
    levels: Tuple[float, ...] = (0.5, 0.9)
    slice_level: float = 0.0
    fiber_directions: Optional[List[Tuple[float, float]]] = None
    fiber_center: Optional[Tuple[float, float]] = None
    fiber_radius: float = 1.0
    c1: Optional[float] = None

    def __post_init__(self):
        if self.battery < 0:
            raise ValueError("`battery` must be nonnegative.")
        if any(not 0 < s < 1 for s in self.levels):
            raise ValueError("Band levels must lie in (0, 1).")

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        if "levels" in d:
            d["levels"] = tuple(float(s) for s in d["levels"])
        return cls(**d)


@dataclass(frozen=True)
class ExperimentConfig:
    """
    An ε-sweep experiment.

    Attributes
    ----------
    eps : list of float
        Strictly decreasing interface widths.
    well : str
        ``"quartic"`` or the path of a two-column CSV well.
    grid : GridSpec
    ansatz : AnsatzSpec
    solve : SolveConfig
    diagnostics : DiagnosticsSpec
    output : str
        Run directory.
    seed : int
        Seed of the random test functions.
    """

    eps: Tuple[float, ...] = (0.1, 0.05, 0.025)
    well: str = "quartic"
    grid: GridSpec = field(default_factory=GridSpec)
    ansatz: AnsatzSpec = field(default_factory=AnsatzSpec)
    solve: SolveConfig = field(default_factory=SolveConfig)
    diagnostics: DiagnosticsSpec = field(default_factory=DiagnosticsSpec)
    output: str = "run"
    seed: int = 0

    def __post_init__(self):
        eps = [float(e) for e in self.eps]
        if len(eps) == 0:
            raise ValueError("At least one ε is needed.")
        if any(not e > 0 for e in eps):
            raise ValueError("Every ε must be positive.")
        if any(b >= a for a, b in zip(eps[:-1], eps[1:])):
            raise ValueError("The ε list must be strictly decreasing.")
        if self.grid.spacing(eps[-1], eps[0]) > eps[-1] / 8 * (1 + 1e-9):
            raise ValueError("The grid must resolve the smallest ε with spacing at most ε/8.")

    def make_well(self):
        from ..potential import DoubleWell, QuarticWell

        if self.well == "quartic":
            return QuarticWell()
        return DoubleWell.from_csv(self.well)

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        unknown = set(d) - {f.name for f in fields(cls)}
        if unknown:
            raise ValueError(f"Unknown configuration keys: {', '.join(sorted(unknown))}.")
        if "eps" in d:
            d["eps"] = tuple(float(e) for e in d["eps"])
        if "grid" in d:
            d["grid"] = GridSpec.from_dict(d["grid"])
        if "ansatz" in d:
            d["ansatz"] = AnsatzSpec.from_dict(d["ansatz"])
        if "solve" in d:
            d["solve"] = SolveConfig(**d["solve"])
        if "diagnostics" in d:
            d["diagnostics"] = DiagnosticsSpec.from_dict(d["diagnostics"])
        return cls(**d)

    @classmethod
    def from_json(cls, filepath):
        with open(filepath) as f:
            return cls.from_dict(json.load(f))

    def with_overrides(self, assignments):
        """
        Apply ``dotted.key=json-value`` assignments.

        Values are parsed as JSON and fall back to plain strings.

        Example
        -------

        .. doctest::

            >>> from phasefield_core.harness import ExperimentConfig
            >>>
            >>> cfg = ExperimentConfig().with_overrides(["solve.flow_tol=1e-4", "seed=3"])
            >>> print(cfg.solve.flow_tol, cfg.seed)
            0.0001 3
        """
        d = self.to_dict()
        for item in assignments:
            key, sep, raw = item.partition("=")
            if not sep:
                raise ValueError(f"Overrides must read key=value, got '{item}'.")
            try:
                value = json.loads(raw)
            except json.JSONDecodeError:
                value = raw
            node = d
            parts = key.strip().split(".")
            for p in parts[:-1]:
                if not isinstance(node.get(p), dict):
                    raise ValueError(f"Unknown configuration key '{key}'.")
                node = node[p]
            if parts[-1] not in node:
                raise ValueError(f"Unknown configuration key '{key}'.")
            node[parts[-1]] = value
        return ExperimentConfig.from_dict(d)

    def replace(self, **changes):
        return replace(self, **changes)
