"""Stream filter decoding: FlateDecode, ASCIIHexDecode, ASCII85Decode.

Other filters (DCTDecode, LZWDecode, JBIG2Decode, ...) are passed through
undecoded with ``decoded=False`` so byte counts and offsets keep working.
"""

from __future__ import annotations

import base64
import binascii
import zlib
from dataclasses import dataclass

from .objects import PdfName, PdfStream

_SUPPORTED = {
    "FlateDecode": "flate",
    "Fl": "flate",
    "ASCIIHexDecode": "asciihex",
    "AHx": "asciihex",
    "ASCII85Decode": "ascii85",
    "A85": "ascii85",
}


@dataclass(slots=True)
class DecodedStream:
    """Filter-chain result; ``decoded`` is False when any filter failed or
    was unsupported, in which case ``data`` holds the best bytes available
    (raw input for unsupported filters, empty for corrupt data)."""

    data: bytes
    decoded: bool
    error: str | None = None


class CorruptStreamData(ValueError):
    pass


def flate_decode(data: bytes, parms: dict | None = None) -> bytes:
    try:
        out = zlib.decompress(data)
    except zlib.error:
        try:
            # Some producers omit the zlib wrapper; retry as raw deflate.
            out = zlib.decompress(data, wbits=-15)
        except zlib.error as exc:
            raise CorruptStreamData(f"flate: {exc}") from exc
    return _apply_predictor(out, parms)


def asciihex_decode(data: bytes, parms: dict | None = None) -> bytes:
    digits = bytearray()
    for b in data:
        if b in b"0123456789abcdefABCDEF":
            digits.append(b)
        elif b == 0x3E:  # '>' EOD
            break
    if len(digits) % 2:
        digits.append(0x30)
    try:
        return bytes.fromhex(digits.decode("ascii"))
    except ValueError as exc:
        raise CorruptStreamData(f"asciihex: {exc}") from exc


def ascii85_decode(data: bytes, parms: dict | None = None) -> bytes:
    body = data.split(b"~>", 1)[0]
    body = bytes(b for b in body if b not in b"\x00\t\n\x0c\r ")
    if body.startswith(b"<~"):
        body = body[2:]
    try:
        return base64.a85decode(body)
    except (ValueError, binascii.Error) as exc:
        raise CorruptStreamData(f"ascii85: {exc}") from exc


def _apply_predictor(data: bytes, parms: dict | None) -> bytes:
    if not parms:
        return data
    predictor = _int_of(parms.get("Predictor"), 1)
    if predictor <= 1:
        return data
    colors = max(1, _int_of(parms.get("Colors"), 1))
    bpc = max(1, _int_of(parms.get("BitsPerComponent"), 8))
    columns = max(1, _int_of(parms.get("Columns"), 1))
    bpp = max(1, (colors * bpc + 7) // 8)
    rowlen = (colors * bpc * columns + 7) // 8
    # A row can never exceed the decoded payload; clamping keeps corrupt
    # parameter values from forcing absurd allocations.
    rowlen = min(rowlen, max(1, len(data)))
    bpp = min(bpp, rowlen)
    if predictor == 2:
        return _tiff_predictor(data, rowlen, bpp)
    return _png_predictor(data, rowlen, bpp)


def _tiff_predictor(data: bytes, rowlen: int, bpp: int) -> bytes:
    out = bytearray(data)
    for row_start in range(0, len(out) - rowlen + 1, rowlen):
        for i in range(row_start + bpp, row_start + rowlen):
            out[i] = (out[i] + out[i - bpp]) & 0xFF
    return bytes(out)


def _png_predictor(data: bytes, rowlen: int, bpp: int) -> bytes:
    out = bytearray()
    prev = bytearray(rowlen)
    pos = 0
    n = len(data)
    while pos + 1 <= n:
        ftype = data[pos]
        row = bytearray(data[pos + 1 : pos + 1 + rowlen])
        if len(row) < rowlen:
            row.extend(b"\x00" * (rowlen - len(row)))
        pos += 1 + rowlen
        if ftype == 1:  # Sub
            for i in range(bpp, rowlen):
                row[i] = (row[i] + row[i - bpp]) & 0xFF
        elif ftype == 2:  # Up
            for i in range(rowlen):
                row[i] = (row[i] + prev[i]) & 0xFF
        elif ftype == 3:  # Average
            for i in range(rowlen):
                left = row[i - bpp] if i >= bpp else 0
                row[i] = (row[i] + (left + prev[i]) // 2) & 0xFF
        elif ftype == 4:  # Paeth
            for i in range(rowlen):
                left = row[i - bpp] if i >= bpp else 0
                up = prev[i]
                upleft = prev[i - bpp] if i >= bpp else 0
                p = left + up - upleft
                pa, pb, pc = abs(p - left), abs(p - up), abs(p - upleft)
                if pa <= pb and pa <= pc:
                    pred = left
                elif pb <= pc:
                    pred = up
                else:
                    pred = upleft
                row[i] = (row[i] + pred) & 0xFF
        out.extend(row)
        prev = row
        if pos >= n:
            break
    return bytes(out)


def _int_of(value: object, default: int) -> int:
    if isinstance(value, bool):
        return default
    if isinstance(value, (int, float)):
        return int(value)
    return default


_DECODERS = {
    "flate": flate_decode,
    "asciihex": asciihex_decode,
    "ascii85": ascii85_decode,
}


def filter_chain(stream_dict: dict, resolver=None) -> list[tuple[str, dict | None]]:
    """Normalize /Filter and /DecodeParms into a list of (name, parms)."""
    resolve = resolver if resolver is not None else (lambda v: v)
    filt = resolve(stream_dict.get("Filter"))
    parms = resolve(stream_dict.get("DecodeParms", stream_dict.get("DP")))
    if filt is None:
        return []
    if isinstance(filt, PdfName):
        filt_list = [filt.value]
    elif isinstance(filt, list):
        filt_list = [f.value for f in (resolve(x) for x in filt) if isinstance(f, PdfName)]
    else:
        return []
    if isinstance(parms, dict):
        parms_list: list[dict | None] = [parms]
    elif isinstance(parms, list):
        parms_list = [p if isinstance(p, dict) else None for p in (resolve(x) for x in parms)]
    else:
        parms_list = []
    parms_list += [None] * (len(filt_list) - len(parms_list))
    return list(zip(filt_list, parms_list))


def decode_stream(stream: PdfStream, resolver=None) -> DecodedStream:
    """Run the stream's filter chain over its raw bytes.

    ``resolver`` maps indirect references to direct values (the parser
    provides one bound to its document); without it references inside
    /Filter or /DecodeParms are left untouched.
    """
    data = stream.raw
    chain = filter_chain(stream.dictionary, resolver)
    if not chain:
        return DecodedStream(data, True)
    resolve = resolver if resolver is not None else (lambda v: v)
    for name, parms in chain:
        kind = _SUPPORTED.get(name)
        if kind is None:
            return DecodedStream(data, False, f"unsupported filter /{name}")
        if parms is not None:
            parms = {k: resolve(v) for k, v in parms.items()}
        try:
            data = _DECODERS[kind](data, parms)
        except CorruptStreamData as exc:
            return DecodedStream(b"", False, str(exc))
    return DecodedStream(data, True)
