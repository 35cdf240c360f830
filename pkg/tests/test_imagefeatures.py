"""Image enumeration and bucket-block tests."""

import random

import pytest

import fixtures
from pdffeatures import enumerate_images, image_block, parse_document
from pdffeatures.imagefeatures import DEFAULT_THRESHOLDS, ImageBlock, ImageInfo


def info(w, h, offset, mismatch=False):
    return ImageInfo(w, h, w * h, offset, mismatch)


class TestEnumerateImages:
    def test_no_images(self):
        assert enumerate_images(parse_document(fixtures.no_images())) == []

    def test_one_image_fixture(self):
        data = fixtures.one_image()
        images = enumerate_images(parse_document(data))
        assert len(images) == 1
        img = images[0]
        assert (img.width_px, img.height_px, img.area_px) == (10, 10, 100)
        measured = data.index(b"stream", data.index(b"/Subtype /Image"))
        assert img.byte_offset == measured
        assert not img.length_mismatch

    def test_orphan_image_enumerated(self):
        images = enumerate_images(parse_document(fixtures.two_images_one_orphan()))
        assert sorted((i.width_px, i.height_px) for i in images) == [(100, 100), (600, 600)]

    def test_inline_image_counted(self):
        b = fixtures.PdfBuilder()
        content = b.add_stream("", b"BI /W 12 /H 3 /BPC 8 /CS /G ID \x01\x02\x03 EI")
        page = b.add(f"<< /Type /Page /Parent 3 0 R /Contents {content} 0 R >>")
        pages = b.add(f"<< /Type /Pages /Kids [{page} 0 R] /Count 1 >>")
        catalog = b.add(f"<< /Type /Catalog /Pages {pages} 0 R >>")
        data = b.build(root=catalog)
        images = enumerate_images(parse_document(data))
        assert len(images) == 1
        assert (images[0].width_px, images[0].height_px) == (12, 3)
        assert images[0].byte_offset == data.index(b"stream")


class TestImageBlock:
    def test_no_images_all_zero(self):
        block = image_block([], 1000)
        assert block == ImageBlock()
        assert len(block.values()) == 12

    def test_single_xsmall(self):
        block = image_block([info(10, 10, 500)], 1000)
        assert block.count_image_xsmall == 1
        assert block.count_image_total == 1
        assert block.image_totalpx == 100
        assert block.ratio_imagepx_size == pytest.approx(0.1)
        assert block.image_mismatch == 0

    def test_bucket_boundaries(self):
        cases = [
            (1023, "xsmall"),
            (1024, "small"),
            (16383, "small"),
            (16384, "med"),
            (262143, "med"),
            (262144, "large"),
            (1048575, "large"),
            (1048576, "xlarge"),
        ]
        for area, bucket in cases:
            block = image_block([info(area, 1, 0)], 10)
            assert getattr(block, f"count_image_{bucket}") == 1, (area, bucket)

    def test_position_stats_two_images(self):
        # 100x100 (small) and 600x600 (large) at offsets 200 and 800.
        block = image_block([info(100, 100, 200), info(600, 600, 800)], 10_000)
        assert block.count_image_small == 1
        assert block.count_image_large == 1
        assert block.pos_image_min == 200
        assert block.pos_image_max == 800
        assert block.pos_image_avg == pytest.approx(500.0)

    def test_zero_area_sets_mismatch(self):
        block = image_block([info(0, 10, 5)], 100)
        assert block.image_mismatch == 1

    def test_length_conflict_sets_mismatch(self):
        block = image_block([info(10, 10, 5, mismatch=True)], 100)
        assert block.image_mismatch == 1

    def test_bucket_partition_property(self):
        rng = random.Random(7)
        for _ in range(200):
            images = [
                info(rng.randrange(0, 2000), rng.randrange(0, 2000), rng.randrange(0, 10_000))
                for _ in range(rng.randrange(0, 12))
            ]
            block = image_block(images, 50_000)
            bucket_sum = (
                block.count_image_xsmall
                + block.count_image_small
                + block.count_image_med
                + block.count_image_large
                + block.count_image_xlarge
            )
            assert bucket_sum == block.count_image_total == len(images)
            if images:
                assert block.pos_image_min <= block.pos_image_avg <= block.pos_image_max
                assert block.ratio_imagepx_size == pytest.approx(block.image_totalpx / 50_000)

    def test_thresholds_are_squares_of_powers_of_two(self):
        t = DEFAULT_THRESHOLDS
        assert (t.xsmall, t.small, t.medium, t.large) == (32**2, 128**2, 512**2, 1024**2)


class TestFixtureBlocks:
    def test_one_image_block(self):
        doc = parse_document(fixtures.one_image())
        block = image_block(enumerate_images(doc), doc.file_size)
        assert block.count_image_xsmall == 1
        assert block.count_image_total == 1
        assert block.image_totalpx == 100

    def test_two_image_buckets(self):
        doc = parse_document(fixtures.two_images_one_orphan())
        block = image_block(enumerate_images(doc), doc.file_size)
        assert block.count_image_small == 1  # 10,000 px
        assert block.count_image_large == 1  # 360,000 px
        assert block.count_image_total == 2
        assert block.image_totalpx == 100 * 100 + 600 * 600
