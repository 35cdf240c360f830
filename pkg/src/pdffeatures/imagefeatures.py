"""Embedded-image enumeration and the 12-value image block.

Pixel-area bucket thresholds are implementation constants (squares of 32,
128, 512 and 1024 pixel sides); pass a different ``BucketThresholds`` to
retune them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .content import iter_content_operators, page_content_streams
from .objects import Document, PdfName, PdfStream
from .parser import decode_stream, resolve

_INT_LIKE = (int, float)


@dataclass(frozen=True, slots=True)
class BucketThresholds:
    xsmall: int = 1_024
    small: int = 16_384
    medium: int = 262_144
    large: int = 1_048_576


DEFAULT_THRESHOLDS = BucketThresholds()


@dataclass(frozen=True, slots=True)
class ImageInfo:
    """One embedded image: pixel geometry plus its byte offset in the file.

    ``length_mismatch`` marks a declared /Length that disagrees with the
    captured stream extent (feeds the block's sanity flag).
    """

    width_px: int
    height_px: int
    area_px: int
    byte_offset: int
    length_mismatch: bool = False


@dataclass(frozen=True, slots=True)
class ImageBlock:
    count_image_xsmall: int = 0
    count_image_small: int = 0
    count_image_med: int = 0
    count_image_large: int = 0
    count_image_xlarge: int = 0
    count_image_total: int = 0
    image_totalpx: int = 0
    ratio_imagepx_size: float = 0.0
    pos_image_min: int = 0
    pos_image_avg: float = 0.0
    pos_image_max: int = 0
    image_mismatch: int = 0

    def values(self) -> list[float]:
        return [
            self.count_image_xsmall,
            self.count_image_small,
            self.count_image_med,
            self.count_image_large,
            self.count_image_xlarge,
            self.count_image_total,
            self.image_totalpx,
            self.ratio_imagepx_size,
            self.pos_image_min,
            self.pos_image_avg,
            self.pos_image_max,
            self.image_mismatch,
        ]


def _dimension(doc: Document, value) -> int:
    value = resolve(doc, value)
    if isinstance(value, bool) or not isinstance(value, _INT_LIKE):
        return 0
    out = int(value)
    return out if out >= 0 else 0


def _xobject_images(doc: Document) -> list[ImageInfo]:
    images: list[ImageInfo] = []
    for key in sorted(doc.objects):
        value = doc.objects[key]
        if not isinstance(value, PdfStream):
            continue
        subtype = resolve(doc, value.dictionary.get("Subtype"))
        if not (isinstance(subtype, PdfName) and subtype.value == "Image"):
            continue
        width = _dimension(doc, value.dictionary.get("Width"))
        height = _dimension(doc, value.dictionary.get("Height"))
        declared = resolve(doc, value.dictionary.get("Length"))
        mismatch = isinstance(declared, int) and declared != len(value.raw)
        images.append(
            ImageInfo(
                width_px=width,
                height_px=height,
                area_px=width * height,
                byte_offset=max(0, value.offset),
                length_mismatch=mismatch,
            )
        )
    return images


def _inline_images(doc: Document) -> list[ImageInfo]:
    images: list[ImageInfo] = []
    for page in doc.pages:
        for stream in page_content_streams(doc, page):
            decoded = decode_stream(doc, stream)
            if not decoded.decoded:
                continue
            for operands, operator in iter_content_operators(decoded.data):
                if operator != b"BI" or not operands:
                    continue
                params = operands[0] if isinstance(operands[0], dict) else {}
                width = _dimension(doc, params.get("W", params.get("Width")))
                height = _dimension(doc, params.get("H", params.get("Height")))
                images.append(
                    ImageInfo(
                        width_px=width,
                        height_px=height,
                        area_px=width * height,
                        byte_offset=max(0, stream.offset),
                    )
                )
    return images


def enumerate_images(doc: Document) -> list[ImageInfo]:
    """Image XObjects (referenced or orphaned) plus inline images.

    Inline images inherit the byte offset of their enclosing content
    stream; parse failures contribute zero-dimension entries.
    """
    return _xobject_images(doc) + _inline_images(doc)


def image_block(
    images: list[ImageInfo],
    file_size: int,
    thresholds: BucketThresholds = DEFAULT_THRESHOLDS,
) -> ImageBlock:
    if not images:
        return ImageBlock()
    xs = s = m = lg = xl = 0
    for image in images:
        area = image.area_px
        if area < thresholds.xsmall:
            xs += 1
        elif area < thresholds.small:
            s += 1
        elif area < thresholds.medium:
            m += 1
        elif area < thresholds.large:
            lg += 1
        else:
            xl += 1
    total = len(images)
    totalpx = sum(image.area_px for image in images)
    offsets = [image.byte_offset for image in images]
    mismatch = int(any(image.area_px == 0 for image in images) or any(image.length_mismatch for image in images))
    return ImageBlock(
        count_image_xsmall=xs,
        count_image_small=s,
        count_image_med=m,
        count_image_large=lg,
        count_image_xlarge=xl,
        count_image_total=total,
        image_totalpx=totalpx,
        ratio_imagepx_size=totalpx / file_size if file_size > 0 else 0.0,
        pos_image_min=min(offsets),
        pos_image_avg=sum(offsets) / total,
        pos_image_max=max(offsets),
        image_mismatch=mismatch,
    )
