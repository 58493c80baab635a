"""
结论登记表

claim_id → (出处描述, 期望值说明)。报告中的每一行都通过 claim() 构造，
因此不会出现登记表之外的结论编号；登记顺序即报告中同一 (r, d) 内的行序。
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from core.report_writer import ClaimResult


@dataclass(frozen=True)
class Claim:
    """
    Attributes:
        claim_id: 结论编号
        locator: 出处描述
        expectation: 期望值的来源（公式或独立计算路径）
    """

    claim_id: str
    locator: str
    expectation: str


_ENTRIES = [
    # ===== 样条空间 =====
    Claim("spline.dim", "spline space dimension via Billera-Rose nullity", "informational"),
    Claim("spline.exactness", "Billera-Rose complex exactness: HF(N,d) = rows - rank", "defect 0"),
    Claim(
        "spline.alfeld_schumaker",
        "dimension formula L(Delta,r,d) in the range d >= 3r+1",
        "L(Delta,r,d)",
    ),
    Claim(
        "spline.conjecture",
        "dimension formula L(Delta,r,d) conjectured for d >= 2r+1",
        "L(Delta,r,d)",
    ),
    Claim("spline.sharpness", "bound d >= 2r+1 is sharp on Delta_S: dim != L at d = 2r", "!= L"),
    Claim(
        "spline.decomposition",
        "dim C^r(Delta_S)_d at d = 2r+1 equals C(d+2,2) + 4C(r+2,2) + eps(r)",
        "C(d+2,2)+4C(r+2,2)+eps",
    ),
    Claim("spline.sigma", "sigma term on Delta_S: 2r*alpha - 2*alpha^2", "closed form"),
    # ===== K(r) =====
    Claim("k.dim", "dim K(r) = n for r = 2n-1, n+1 for r = 2n", "r//2 + 1"),
    Claim("k.lower_bound", "dim K(r) >= n (r odd) or n+1 (r even)", "true"),
    Claim("k.epsilon", "eps(r) in original coordinates equals dim K(r)", "dim K(r)"),
    Claim("k.transport", "change of variables carries the original ideal piece onto K(r)", "true"),
    Claim("k.slicing", "coefficient slices of every K(r) basis element lie in the colon ideals", "true"),
    Claim("k.symmetry", "K(r) is x<->z symmetric with zero antisymmetric part", "true"),
    Claim("k.derivative", "y * d^2F/dxdz maps K(r) into K(r-1)", "true"),
    Claim("k.derivative_image", "dimension of the y * d^2F/dxdz image inside K(r-1)", "<= dim K(r-1)"),
    Claim("k.min_degree", "intersection ideal vanishes below degree r, generators in degree r", "true"),
    Claim("k.generator_degrees", "colon ideal generator degrees (n,n) or (n,n+1)", "(n,n) / (n,n+1)"),
    Claim("k.complete_intersection", "colon ideal quotient has the Koszul Hilbert function", "true"),
    Claim("k.hilbert_identity", "C(r+2,2) - dim K(r) = 2 HF(single) - HF(joint)", "true"),
    Claim("k.colon_exclusions", "y^j outside the colon ideals for j < r, y^r in K(r)", "true"),
    Claim("k.support_bound", "K(r) monomials x^a y^b z^c satisfy a, c <= r-n", "true"),
    # ===== 结构矩阵 =====
    Claim("structmat.kernel_dim_total", "sum of nullities of the blocks M(k), k = n..r", "n(n+1)/2 or (n+1)(n+2)/2"),
    Claim("structmat.u_symmetric", "U = J D Nbar D is symmetric", "true"),
    Claim("structmat.jut_lu", "J U J has an LU decomposition", "true"),
    Claim("structmat.roth_operator", "triangular Roth operator surjective iff dim K(r) is as expected", "dim K(r) == p"),
    Claim("structmat.params", "parameter matrices of every K(r) basis element satisfy all relations", "true"),
    Claim("structmat.roth_random", "seeded random right-hand sides solved with triangular X, Y and zero residual", "true"),
    Claim("structmat.n_block_schur", "det N equals the rectangular Schur module dimension", "Weyl dimension"),
    Claim("schur.det_vs_weyl", "Schur module dimension: binomial determinant vs Weyl product", "Weyl product"),
    Claim("schur.hook", "dimension of S^(2,1) V is t(t-1)(t+1)/3", "t(t-1)(t+1)/3"),
    Claim("positivity.n_block", "every minor of N is strictly positive", "0 non-positive"),
    Claim("positivity.north_east", "north-east contiguous minors of N are positive", "0 non-positive"),
    Claim("positivity.windows", "contiguous Toeplitz windows of (1+x)^(r+1) are positive", "0 non-positive"),
    Claim("positivity.jn_symmetric", "J N is symmetric", "true"),
    Claim("positivity.jd_symmetric", "J D is symmetric", "true"),
    Claim("roth.solvable", "rank criterion for W X - Y^T W^T = C", "true"),
    Claim("roth.residual", "solution residual is zero", "zero matrix"),
    Claim("roth.triangular", "X and Y have the requested triangular shape", "true"),
    Claim("roth.x", "solution X", "informational"),
    Claim("roth.y", "solution Y", "informational"),
    Claim("lu_search.tested", "invertible W without LU decomposition tested", "informational"),
    Claim("lu_search.surjective_without_lu", "surjective triangular Roth operator with W lacking LU", "informational"),
]

CLAIMS: Dict[str, Claim] = {entry.claim_id: entry for entry in _ENTRIES}
CLAIM_ORDER = tuple(CLAIMS)


def claim(
    claim_id: str,
    computed: Any,
    expected: Any,
    r: Optional[int] = None,
    d: Optional[int] = None,
    passed: Optional[bool] = None,
) -> ClaimResult:
    """
    构造登记表中某条结论的结果行

    Raises:
        KeyError: claim_id 未登记
    """
    entry = CLAIMS[claim_id]
    return ClaimResult.compare(claim_id, entry.locator, computed, expected, r, d, passed)


def informational(claim_id: str, computed: Any, r: Optional[int] = None, d: Optional[int] = None):
    """无期望值的记录行，恒为通过"""
    return claim(claim_id, computed, "", r, d, passed=True)
