"""udc — MDS error-correcting codes built from unit matrix schemes.

A pair of n x n matrices with U V = I yields, for every selection of r
rows of U, a rate r/n linear code whose generator is the selected rows
and whose check structure comes from the matching columns of V.  With
Fourier (or more general Vandermonde) matrices over a finite field and
an arithmetic row selection, the codes are MDS and admit fast
syndrome-based error correction.

Quick start::

    import udc

    field = udc.make_field(29)
    scheme = udc.fourier_scheme(field, 7)
    code = udc.derive_code(scheme, udc.RowSelection(start=0, step=1, count=3))
    sent = code.encode([1, 2, 3])
    sent[0] += 5; sent[4] += 11          # two symbol errors
    outcome = udc.decode(code, sent % 29)
    assert list(outcome.message) == [1, 2, 3]
"""

__version__ = "0.1.0"

from .backend import backend_name
from .channel import ChannelError, SimulationResult, corrupt, random_message, simulate
from .container import (
    BlockReport,
    ContainerError,
    UnpackResult,
    pack,
    symbol_width,
    unpack,
)
from .decoder import (
    STATUS_CORRECTED,
    STATUS_FAILURE,
    STATUS_NO_ERROR,
    DecodeOutcome,
    DecodeSetupError,
    ErrorLocator,
    Syndromes,
    compute_syndromes,
    decode,
    decode_single_error,
    decode_with_check_rows,
    hankel_kernel,
    locate_errors,
    recover_message,
    solve_error_values,
)
from .designer import (
    CodeDesign,
    DesignError,
    FailureBound,
    FieldCandidate,
    design_code,
    failure_bound,
    field_candidates,
)
from .fields import (
    ExtensionField,
    Field,
    FieldElement,
    FieldError,
    PrimeField,
    field_from_spec,
    format_field_spec,
    make_field,
    parse_field_spec,
)
from .linalg import LinAlgError
from .schemes import (
    LinearCode,
    RowSelection,
    SchemeError,
    UnitScheme,
    code_from_descriptor,
    derive_code,
    format_code_descriptor,
    fourier_scheme,
    mds_predicate,
    parse_code_descriptor,
    star_multiply,
    vandermonde_minor_det,
    vandermonde_scheme,
)

__all__ = [
    "__version__",
    "backend_name",
    # fields
    "Field",
    "PrimeField",
    "ExtensionField",
    "FieldElement",
    "FieldError",
    "make_field",
    "field_from_spec",
    "parse_field_spec",
    "format_field_spec",
    # schemes and codes
    "UnitScheme",
    "RowSelection",
    "LinearCode",
    "SchemeError",
    "fourier_scheme",
    "vandermonde_scheme",
    "derive_code",
    "mds_predicate",
    "star_multiply",
    "vandermonde_minor_det",
    "format_code_descriptor",
    "parse_code_descriptor",
    "code_from_descriptor",
    # decoding
    "decode",
    "decode_single_error",
    "decode_with_check_rows",
    "compute_syndromes",
    "hankel_kernel",
    "locate_errors",
    "solve_error_values",
    "recover_message",
    "DecodeOutcome",
    "Syndromes",
    "ErrorLocator",
    "DecodeSetupError",
    "STATUS_CORRECTED",
    "STATUS_NO_ERROR",
    "STATUS_FAILURE",
    # design
    "CodeDesign",
    "FieldCandidate",
    "FailureBound",
    "DesignError",
    "design_code",
    "field_candidates",
    "failure_bound",
    # channel
    "simulate",
    "corrupt",
    "random_message",
    "SimulationResult",
    "ChannelError",
    # container
    "pack",
    "unpack",
    "symbol_width",
    "UnpackResult",
    "BlockReport",
    "ContainerError",
    # linear algebra
    "LinAlgError",
]
