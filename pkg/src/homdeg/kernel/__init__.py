"""Kernel selection: compiled extension when available, pure Python otherwise.

Set HOMDEG_KERNEL=python or HOMDEG_KERNEL=c to force a twin; the default
("auto") prefers the compiled one.  Both twins implement the same API and
produce identical results; tests assert the parity.
"""

import os

from . import pykernel

_choice = os.environ.get("HOMDEG_KERNEL", "auto")

if _choice == "python":
    impl = pykernel
elif _choice == "c":
    from . import ckernel as impl  # hard failure if not built: the user asked
else:
    try:
        from . import ckernel as impl
    except ImportError:
        impl = pykernel

KERNEL_NAME = impl.KERNEL_NAME
mono_mul = impl.mono_mul
mono_div = impl.mono_div
mono_divides = impl.mono_divides
mono_lcm = impl.mono_lcm
mono_deg = impl.mono_deg
mono_key = impl.mono_key
term_key = impl.term_key
lead_term = impl.lead_term
add_scaled = impl.add_scaled
reduce_full = impl.reduce_full
