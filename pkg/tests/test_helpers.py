import math

import pytest

from utils import format_duration, format_number, parse_number_list, round_significant


def test_format_number():
    assert format_number(math.log(2.0)) == "0.69314718056"
    assert format_number(0.0) == "0"
    assert format_number(-0.5) == "-0.5"
    assert format_number(None) == ""
    assert format_number(7) == "7"
    assert format_number(math.nan) == "nan"
    assert format_number(1.23456789e-7, 4) == "1.235e-07"


def test_round_significant_matches_printed_value():
    value = 0.49501790123456789
    assert round_significant(value) == float(format_number(value))
    assert round_significant(None) is None


def test_parse_number_list():
    assert parse_number_list("100, 200,400", int) == [100, 200, 400]
    assert parse_number_list("0,1.5,", float) == [0.0, 1.5]
    assert parse_number_list("exact,residual", str) == ["exact", "residual"]
    with pytest.raises(ValueError):
        parse_number_list("1,x", int)


def test_format_duration():
    assert format_duration(0.25) == "250ms"
    assert format_duration(2.0) == "2.0s"
    assert format_duration(125.0) == "2m 5s"


def test_logger_renders_context(caplog):
    from utils import get_logger

    logger = get_logger("tests.context")
    with caplog.at_level("INFO", logger="tests.context"):
        logger.info("Row done", L=10, value=1.0 / 3.0, beta=0.5j)
    assert "Row done | L=10 value=0.333333 beta=0+0.5j" in caplog.text


def test_logger_timed_block(caplog):
    from utils import get_logger

    logger = get_logger("tests.timed")
    with caplog.at_level("INFO", logger="tests.timed"):
        with logger.timed("Block finished", points=3):
            pass
    assert "Block finished | points=3 elapsed_s=" in caplog.text
