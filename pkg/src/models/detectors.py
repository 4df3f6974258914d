""" Configuration and fitted-state models for the three detectors and their ensemble.

Every fitted model is a frozen pydantic model that serializes to JSON as-is.
Support vectors, tree split values and LOF references live in the scaled
feature space; each model carries the ScalingParams used to get there so
scoring can be applied to raw window features.

Note:
    - ``kind`` is the discriminator used by the model document envelope
    - ``LofModel.lrd`` uses ``None`` as the infinite-density sentinel
      (duplicate clusters), since JSON has no infinity
"""

from enum import Enum
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.window import ScalingParams


class DetectorKind(str, Enum):
    OCSVM = "ocsvm"
    IFOREST = "iforest"
    LOF = "lof"
    ENSEMBLE = "ensemble"


class KernelSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["linear", "rbf"] = "rbf"
    # None resolves to 1 / feature dimension at fit time
    gamma: Optional[float] = Field(default=None, gt=0)


class OcSvmTrainConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    nu: float = Field(default=0.1, gt=0, le=1)
    tolerance: float = Field(default=1e-6, gt=0)
    # None means 10 * n
    max_passes: Optional[int] = Field(default=None, ge=1)


class OcSvmModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["ocsvm"] = "ocsvm"
    support_vectors: list[list[float]]
    alphas: list[float]
    rho: float
    kernel: KernelSpec
    scaling: ScalingParams
    nu: float = Field(gt=0, le=1)
    n_train: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_shapes(self) -> "OcSvmModel":
        if len(self.support_vectors) != len(self.alphas):
            raise ValueError("support_vectors and alphas must have the same length")
        if self.kernel.kind == "rbf" and self.kernel.gamma is None:
            raise ValueError("a fitted rbf kernel needs an explicit gamma")
        return self

    @property
    def n_features(self) -> int:
        return self.scaling.dim

    @property
    def upper_bound(self) -> float:
        return 1.0 / (self.nu * self.n_train)


class IForestConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_trees: int = Field(default=100, ge=1)
    subsample_size: int = Field(default=256, ge=2)
    seed: int = Field(default=0, ge=0, lt=2**64)
    score_threshold: float = Field(default=0.5, gt=0, lt=1)


class IsolationNode(BaseModel):
    model_config = ConfigDict(frozen=True)

    size: int = Field(ge=1)
    depth: int = Field(ge=0)
    split_dim: Optional[int] = None
    split_value: Optional[float] = None
    left: Optional["IsolationNode"] = None
    right: Optional["IsolationNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def leaves(self) -> list["IsolationNode"]:
        if self.is_leaf:
            return [self]
        return self.left.leaves() + self.right.leaves()

    def height(self) -> int:
        if self.is_leaf:
            return self.depth
        return max(self.left.height(), self.right.height())


class IForestModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["iforest"] = "iforest"
    trees: list[IsolationNode]
    subsample_size: int = Field(ge=1)
    scaling: ScalingParams

    @property
    def n_features(self) -> int:
        return self.scaling.dim


class LofConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int = Field(default=20, ge=1)
    factor_threshold: float = Field(default=1.5, gt=0)


class LofModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["lof"] = "lof"
    reference_points: list[list[float]]
    k: int = Field(ge=1)
    k_distances: list[float]
    lrd: list[Optional[float]]
    scaling: ScalingParams

    @model_validator(mode="after")
    def _check_lengths(self) -> "LofModel":
        n = len(self.reference_points)
        if len(self.k_distances) != n or len(self.lrd) != n:
            raise ValueError("k_distances and lrd must match reference_points")
        if any(v is not None and v <= 0 for v in self.lrd):
            raise ValueError("stored lrd values must be positive")
        return self

    @property
    def n_features(self) -> int:
        return self.scaling.dim


class EnsembleSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    subset_fraction: float = Field(default=0.8, gt=0, le=1)


class EnsembleModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["ensemble"] = "ensemble"
    ocsvm: OcSvmModel
    iforest: IForestModel
    iforest_threshold: float = Field(gt=0, lt=1)
    lof: LofModel
    lof_threshold: float = Field(gt=0)
    subset_fraction: float = Field(gt=0, le=1)
    member_seeds: dict[str, int]

    @model_validator(mode="after")
    def _check_shared_scaling(self) -> "EnsembleModel":
        if not (self.ocsvm.scaling == self.iforest.scaling == self.lof.scaling):
            raise ValueError("ensemble members must share ScalingParams")
        return self

    @property
    def scaling(self) -> ScalingParams:
        return self.ocsvm.scaling

    @property
    def n_features(self) -> int:
        return self.scaling.dim


class DetectorSettings(BaseModel):
    kernel: KernelSpec = KernelSpec()
    ocsvm: OcSvmTrainConfig = OcSvmTrainConfig()
    iforest: IForestConfig = IForestConfig()
    lof: LofConfig = LofConfig()
    ensemble: EnsembleSettings = EnsembleSettings()


DetectorModel = Annotated[
    Union[OcSvmModel, IForestModel, LofModel, EnsembleModel],
    Field(discriminator="kind"),
]
