from enum import Enum


class TheoremId(str, Enum):
    EllDist = "ell-dist"
    SorDist = "sor-dist"
    MainA = "main-a"
    MainB = "main-b"
    CorGfRestricted = "cor-gf-restricted"
    Cyc0Dist = "cyc0-dist"
    EllPrimeDist = "ellprime-dist"
    PhiPointwise = "phi-pointwise"
    PhiFerrers = "phi-ferrers"
    StirlingEqui = "stirling-equi"
    ACodeEll = "acode-ell"
    ACodeStats = "acode-stats"
    BCodeSor = "bcode-sor"
    BCodeStats = "bcode-stats"
    SorGraphOracle = "sor-graph-oracle"
    LengthBfs = "length-bfs"
    RefLengthBfs = "reflength-bfs"
    DPsiPointwise = "d-psi-pointwise"
    DMain = "d-main"
    DGf = "d-gf"
    DCorGf = "d-cor-gf"
    DEllPrimeDist = "d-ellprime-dist"
    DCCodeStats = "d-ccode-stats"
    DDCodeStats = "d-dcode-stats"
    DLengthBfs = "d-length-bfs"
    DRefLengthBfs = "d-reflength-bfs"


# Theorems quantified over Ferrers bounds
FERRERS_THEOREMS = {
    TheoremId.MainA,
    TheoremId.MainB,
    TheoremId.CorGfRestricted,
    TheoremId.DMain,
    TheoremId.DGf,
    TheoremId.DCorGf,
}


class OutputFormat(str, Enum):
    Json = "json"
    Csv = "csv"
    Text = "text"
    Latex = "latex"


class CodeKind(str, Enum):
    Lehmer = "lehmer"
    A = "a"
    B = "b"
    C = "c"
    D = "d"


class Bijection(str, Enum):
    Phi = "phi"
    Psi = "psi"


class GeneratingSet(str, Enum):
    CoxeterG = "coxeter-G"
    ReflectionsT = "reflections-T"
    CoxeterD = "coxeter-D"
    ReflectionsTD = "reflections-TD"


class GfFamily(str, Enum):
    Length = "length"
    Cyc0 = "cyc0"
    EllPrime = "ellprime"
    MainB = "main-b"
    CorRestricted = "cor-restricted"
    CorFull = "cor-full"
    D = "d"
    CorD = "cor-d"
    CycPlusD = "cyc-plus-d"
    EllPrimeD = "ellprime-d"
