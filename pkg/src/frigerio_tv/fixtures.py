"""Published reference tables, kept as the printed decimal strings.

``QV_TABLE`` rows carry an ``anomalous`` flag for the large-r values that
were published with a known loss of precision; those rows are left out of
fits unless asked for.
"""

from __future__ import annotations

from dataclasses import dataclass

VERSION = 1


@dataclass(frozen=True)
class QVRow:
    g: int
    r: int
    qv_re: str
    anomalous: bool = False

    @property
    def value(self) -> float:
        return float(self.qv_re)


@dataclass(frozen=True)
class VolumeRow:
    g: int
    vol_tet: str
    vol_manifold: str


@dataclass(frozen=True)
class FreeFitRow:
    g: int
    r_max: int
    a: str
    b: str
    c: str


@dataclass(frozen=True)
class FixedFitRow:
    g: int
    r_max: int
    b: str
    c: str


VOLUME_TABLE = (
    VolumeRow(2, "2.007682006682397", "12.046092040094381"),
    VolumeRow(3, "2.2547631818606026", "18.03810545488482"),
    VolumeRow(4, "2.3603494908554774", "23.603494908554772"),
    VolumeRow(5, "2.415787949187158", "28.989455390245897"),
    VolumeRow(6, "2.448617485457304", "34.28064479640226"),
    VolumeRow(7, "2.469695490891516", "39.51512785426426"),
    VolumeRow(8, "2.484045062029212", "44.71281111652581"),
    VolumeRow(9, "2.494259571737797", "49.88519143475594"),
    VolumeRow(10, "2.5017908556003303", "55.039398823207264"),
    VolumeRow(100, "2.5369350366401", "512.4608774013002"),
    VolumeRow(1000, "2.5373497508910896", "5079.774201283962"),
)


def _rows(g, values, first_anomalous=None):
    out = []
    for k, v in enumerate(values):
        r = 5 + 2 * k
        out.append(QVRow(g, r, v, first_anomalous is not None and r >= first_anomalous))
    return tuple(out)


QV_TABLE = (
    _rows(
        2,
        (
            "8.14385123663626", "9.18650442759997", "9.65004427173429", "9.96879239401443",
            "10.20513879726808", "10.38914324592799", "10.53704472005768", "10.65879117905018",
            "10.76091340012164", "10.84790597624064", "10.92297357052110", "10.98846715752597",
            "11.04614827534519", "11.09819658700029", "11.10744853337351", "10.85076510281595",
            "11.70823932238226", "12.05034471052339", "12.57984278565481", "13.01497045469742",
            "13.57883304172589", "13.99851452347661",
        ),
        first_anomalous=35,
    )
    + _rows(
        3,
        (
            "11.49177317419101", "12.80934693191113", "13.58615197340893", "14.12955507845825",
            "14.53997951590672", "14.86388896169300", "15.12724763049115", "15.34618602238218",
            "15.53141775410042", "15.69039789582600", "15.82849506550996", "15.94972272572273",
            "16.05847664488577", "16.12064941438458", "16.64108419344305", "17.23677472848113",
            "17.65793100469928", "18.19438875927008",
        ),
        first_anomalous=33,
    )
    + _rows(
        4,
        (
            "14.51784517894469", "16.30280237431099", "17.32714285662395", "18.05414567452926",
            "18.60945703261760", "19.05151621992931", "19.41350816169271", "19.71628402919349",
            "19.97380655712918", "20.19586182173212", "20.38962564202214", "20.54717170623221",
        ),
    )
    + _rows(
        5,
        (
            "17.56864290428003", "19.74442367439225", "20.99442151342528", "21.88836919170208",
            "22.57622952582667", "23.12700521166837", "23.58015181610567", "23.96067740594393",
            "24.28544874705841", "24.56622464869820",
        ),
    )
    + _rows(
        6,
        (
            "20.59635740610918", "23.16334886690935", "24.62826235095652", "25.68044858255137",
            "26.49408736663125", "27.14829604792329", "27.68837084809290", "28.14316996246829",
            "28.53221301857429", "28.85466729936771",
        ),
    )
    + _rows(
        7,
        (
            "23.62294303366446", "26.57176683519978", "28.24541308192440", "29.45065948405797",
            "30.38589828885670", "31.14019388548824", "31.76448809338449", "32.29128792277911",
        ),
    )
)

# g = 2, 3 use the full-precision values quoted next to the fitting code
FREE_FIT_TABLE = (
    FreeFitRow(2, 33, "11.86209740389381", "-0.835561949347834", "-5.310168450722084"),
    FreeFitRow(3, 31, "17.712568980467715", "-1.95506206171866", "-5.092760978446523"),
    FreeFitRow(4, 27, "22.91592390", "-2.65679563", "-6.74587906"),
    FreeFitRow(5, 23, "27.83557719", "-3.23491649", "-8.35921398"),
    FreeFitRow(6, 23, "32.73892860", "-3.85245863", "-9.69525194"),
    FreeFitRow(7, 19, "37.25645299", "-4.15342419", "-12.1205935"),
)

FIXED_FIT_TABLE = (
    FixedFitRow(2, 33, "-1.07486449", "-4.06269480"),
    FixedFitRow(3, 31, "-2.36670389", "-2.98774665"),
    FixedFitRow(4, 27, "-3.47345292", "-2.75451472"),
    FixedFitRow(5, 23, "-4.50837608", "-2.48549875"),
    FixedFitRow(6, 23, "-5.55394983", "-1.84727854"),
    FixedFitRow(7, 19, "-6.43483298", "-2.38715613"),
)

# b from the fixed-volume fits at full printed precision (plot coordinates)
B_COEFFICIENTS = (
    (2, "-1.0748644910370262"),
    (3, "-2.3667038975251122"),
    (4, "-3.47345292029456"),
    (5, "-4.508376089192973"),
    (6, "-5.5539498337681374"),
    (7, "-6.434832984145784"),
)

AFFINE_LAW = {"slope": "-1.068", "intercept": "0.9061", "r2": "0.9967"}


def qv_rows(g: int | None = None, include_anomalous: bool = False) -> list[QVRow]:
    return [
        row
        for row in QV_TABLE
        if (g is None or row.g == g) and (include_anomalous or not row.anomalous)
    ]


def qv_series(g: int, r_max: int | None = None, include_anomalous: bool = False) -> list[tuple[int, float]]:
    """``[(r, Re QV)]`` for genus g, optionally cut at ``r_max``."""
    return [
        (row.r, row.value)
        for row in qv_rows(g, include_anomalous)
        if r_max is None or row.r <= r_max
    ]


def fit_r_max(g: int) -> int:
    for row in FREE_FIT_TABLE:
        if row.g == g:
            return row.r_max
    raise KeyError(f"no published fit range for g={g}")


def volume_row(g: int) -> VolumeRow:
    for row in VOLUME_TABLE:
        if row.g == g:
            return row
    raise KeyError(f"no published volume for g={g}")
