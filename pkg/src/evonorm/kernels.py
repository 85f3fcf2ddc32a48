"""Kernel selection: compiled extension when available, pure Python otherwise.

Set EVONORM_PURE=1 to force the pure implementation (used by the benchmark
and by tests that compare the two). The selected module is re-exported
wholesale; both implementations are bit-identical by contract.
"""

import os

from . import _zpoly_py

if os.environ.get("EVONORM_PURE") == "1":
    impl = _zpoly_py
else:
    try:
        from . import _zpoly as impl  # type: ignore[no-redef]
    except ImportError:
        impl = _zpoly_py

IMPL = impl.IMPL

zx_trim = impl.zx_trim
zx_deg = impl.zx_deg
zx_add = impl.zx_add
zx_neg = impl.zx_neg
zx_sub = impl.zx_sub
zx_scale = impl.zx_scale
zx_mul = impl.zx_mul
zx_mul_xk = impl.zx_mul_xk
zx_derivative = impl.zx_derivative
zx_content = impl.zx_content
zx_primitive = impl.zx_primitive
zx_eval_int = impl.zx_eval_int
zx_eval_num_den = impl.zx_eval_num_den
zx_sign_at = impl.zx_sign_at
zx_prem = impl.zx_prem
zx_shift_int = impl.zx_shift_int
zx_gcd = impl.zx_gcd
zx_resultant = impl.zx_resultant
zx_sturm_chain = impl.zx_sturm_chain
zx_var_at = impl.zx_var_at
zx_var_at_inf = impl.zx_var_at_inf
zx_count_roots = impl.zx_count_roots
zx_count_all = impl.zx_count_all
zx_cauchy_bound = impl.zx_cauchy_bound
zx_variations = impl.zx_variations
zx_shift1 = impl.zx_shift1
zx_scale_var = impl.zx_scale_var
zx_descartes_01 = impl.zx_descartes_01
zx_divexact = impl.zx_divexact
int_det_bareiss = impl.int_det_bareiss
