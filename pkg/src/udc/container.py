"""Self-describing byte container for encoded payloads.

Layout (all integers big-endian):

    magic  b"UDC1"
    u16    descriptor length
    bytes  code descriptor, utf-8 text
    u64    payload length in bytes
    u8     bytes per code symbol
    bytes  blocks: one codeword per block, n symbols each

Each payload byte becomes one message symbol (hence q >= 256), the last
block is zero-padded, and each code symbol is serialized in
ceil(bits(q-1)/8) bytes.  Unpacking rebuilds the code from the embedded
descriptor, decodes every block, and splices best-effort content (the
raw unencode of the received block) where decoding fails, so one bad
block never destroys the rest of the stream.
"""

import struct
from dataclasses import dataclass

import numpy as np

from . import decoder
from .schemes import LinearCode, code_from_descriptor, format_code_descriptor

MAGIC = b"UDC1"


class ContainerError(ValueError):
    pass


def symbol_width(q: int) -> int:
    """Bytes needed to hold one symbol value in [0, q)."""
    return max(1, ((q - 1).bit_length() + 7) // 8)


def _require_packable(code: LinearCode):
    if code.field.q < 256:
        raise ContainerError(
            f"field order {code.field.q} < 256: a payload byte does not fit in a symbol"
        )
    if code.scheme.kind != "fourier":
        raise ContainerError(
            "container streams carry only descriptor-reconstructible codes "
            "(vandermonde point sets are not part of the descriptor)"
        )


def _symbols_to_bytes(symbols: np.ndarray, width: int) -> bytes:
    out = np.empty(symbols.shape + (width,), dtype=np.uint8)
    for b in range(width):
        out[..., b] = (symbols >> (8 * (width - 1 - b))) & 0xFF
    return out.tobytes()


def _bytes_to_symbols(raw: bytes, width: int, q: int) -> np.ndarray:
    data = np.frombuffer(raw, dtype=np.uint8).astype(np.int64)
    if data.size % width:
        raise ContainerError("block data is not a whole number of symbols")
    data = data.reshape(-1, width)
    vals = np.zeros(data.shape[0], dtype=np.int64)
    for b in range(width):
        vals = (vals << 8) | data[:, b]
    return vals % q  # damaged bytes may exceed q - 1; fold back into range


def pack(code: LinearCode, payload: bytes) -> bytes:
    """Frame payload bytes into self-describing encoded blocks."""
    _require_packable(code)
    descriptor = format_code_descriptor(code).encode("utf-8")
    if len(descriptor) > 0xFFFF:
        raise ContainerError("descriptor too long")
    width = symbol_width(code.field.q)
    header = MAGIC + struct.pack(">H", len(descriptor)) + descriptor
    header += struct.pack(">Q", len(payload)) + struct.pack(">B", width)
    if not payload:
        return header
    r = code.r
    padded = len(payload) + (-len(payload)) % r
    messages = np.zeros(padded, dtype=np.int64)
    messages[: len(payload)] = np.frombuffer(payload, dtype=np.uint8)
    codewords = code.encode(messages.reshape(-1, r))
    return header + _symbols_to_bytes(codewords, width)


@dataclass
class BlockReport:
    index: int
    status: str
    error_count: int | None
    best_effort: bool


@dataclass
class UnpackResult:
    payload: bytes
    descriptor: str
    code: LinearCode
    blocks: list[BlockReport]

    @property
    def ok(self) -> bool:
        return all(not b.best_effort for b in self.blocks)

    @property
    def corrected_symbols(self) -> int:
        return sum(b.error_count or 0 for b in self.blocks if not b.best_effort)


def unpack(blob: bytes) -> UnpackResult:
    """Decode a container produced by pack, tolerating symbol damage.

    Blocks whose error pattern exceeds the code's capability are passed
    through best-effort (marked in the block report) instead of
    aborting the whole stream.
    """
    if blob[:4] != MAGIC:
        raise ContainerError("bad magic: not a container stream")
    off = 4
    (dlen,) = struct.unpack_from(">H", blob, off)
    off += 2
    descriptor = blob[off : off + dlen].decode("utf-8")
    off += dlen
    (payload_len,) = struct.unpack_from(">Q", blob, off)
    off += 8
    (width,) = struct.unpack_from(">B", blob, off)
    off += 1
    code = code_from_descriptor(descriptor)
    if width != symbol_width(code.field.q):
        raise ContainerError(
            f"symbol width {width} does not match the descriptor's field "
            f"(expected {symbol_width(code.field.q)})"
        )
    body = blob[off:]
    expected_blocks = -(-payload_len // code.r) if payload_len else 0
    if len(body) != expected_blocks * code.n * width:
        raise ContainerError(
            f"body holds {len(body)} bytes, expected {expected_blocks * code.n * width}"
        )
    reports: list[BlockReport] = []
    chunks: list[np.ndarray] = []
    if expected_blocks:
        received = _bytes_to_symbols(body, width, code.field.q).reshape(-1, code.n)
        for i in range(expected_blocks):
            outcome = decoder.decode(code, received[i])
            if outcome.ok:
                message = outcome.message
                reports.append(
                    BlockReport(
                        index=i,
                        status=outcome.status,
                        error_count=outcome.error_count,
                        best_effort=False,
                    )
                )
            else:
                message = code.field.matmul(received[i], code.C)
                reports.append(
                    BlockReport(index=i, status=outcome.status, error_count=None, best_effort=True)
                )
            chunks.append(np.asarray(message, dtype=np.int64) & 0xFF)
    stream = np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64)
    payload = stream.astype(np.uint8).tobytes()[:payload_len]
    if len(payload) != payload_len:
        raise ContainerError("stream shorter than the declared payload length")
    return UnpackResult(payload=payload, descriptor=descriptor, code=code, blocks=reports)
