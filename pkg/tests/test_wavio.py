import struct
import wave

import numpy as np
import pytest

from ispear.corpus.wavio import AudioClip, quantize, read_wav, write_wav
from ispear.errors import BadFormatError, EmptyAudioError


def _write_raw(path, ints, rate=16000, channels=1, width=2):
    with wave.open(str(path), "wb") as wf:
        wf.setnchannels(channels)
        wf.setsampwidth(width)
        wf.setframerate(rate)
        wf.writeframes(np.asarray(ints, dtype=f"<i{width}").tobytes())


def test_max_positive_sample(tmp_path):
    p = tmp_path / "one.wav"
    _write_raw(p, [32767])
    clip = read_wav(p)
    assert clip.samples.tolist() == [32767 / 32768]


def test_zero_clip(tmp_path):
    p = tmp_path / "zeros.wav"
    _write_raw(p, np.zeros(160, dtype=np.int16))
    clip = read_wav(p)
    assert clip.sample_rate == 16000
    assert len(clip) == 160
    assert not clip.samples.any()


@pytest.mark.parametrize("value, expected", [(0.0, 0), (1.0, 32767), (-1.0, -32767), (2.0, 32767)])
def test_write_scaling(value, expected):
    assert quantize([value])[0] == expected


def test_roundtrip_on_grid(tmp_path, rng):
    # clips already on the 1/32768 read grid come back within one step
    for _ in range(20):
        k = rng.integers(-32768, 32768, size=rng.integers(1, 4000))
        clip = AudioClip(k / 32768.0, 16000)
        p = tmp_path / "rt.wav"
        write_wav(clip, p)
        back = read_wav(p)
        assert back.sample_rate == 16000
        assert np.max(np.abs(back.samples - clip.samples)) <= 1 / 32768


def test_roundtrip_arbitrary_values(tmp_path, rng):
    # write scales by 32767 and read divides by 32768, so off-grid values
    # can be off by up to 1.5 steps
    clip = AudioClip(rng.uniform(-1, 1, 5000), 8000)
    p = tmp_path / "rt.wav"
    write_wav(clip, p)
    assert np.max(np.abs(read_wav(p).samples - clip.samples)) <= 1.5 / 32768


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_wav(tmp_path / "nope.wav")


def test_stereo_rejected(tmp_path):
    p = tmp_path / "stereo.wav"
    _write_raw(p, np.zeros(20, dtype=np.int16), channels=2)
    with pytest.raises(BadFormatError, match="mono"):
        read_wav(p)


def test_8bit_rejected(tmp_path):
    p = tmp_path / "u8.wav"
    with wave.open(str(p), "wb") as wf:
        wf.setnchannels(1)
        wf.setsampwidth(1)
        wf.setframerate(16000)
        wf.writeframes(bytes(10))
    with pytest.raises(BadFormatError, match="16-bit"):
        read_wav(p)


def test_float_wav_rejected(tmp_path):
    p = tmp_path / "float.wav"
    data = np.zeros(4, dtype="<f4").tobytes()
    fmt = struct.pack("<HHIIHH", 3, 1, 16000, 64000, 4, 32)
    body = b"WAVE" + b"fmt " + struct.pack("<I", len(fmt)) + fmt + b"data" + struct.pack("<I", len(data)) + data
    p.write_bytes(b"RIFF" + struct.pack("<I", len(body)) + body)
    with pytest.raises(BadFormatError):
        read_wav(p)


def test_not_riff(tmp_path):
    p = tmp_path / "junk.wav"
    p.write_bytes(b"not a wav file at all")
    with pytest.raises(BadFormatError):
        read_wav(p)


def test_empty_rejected(tmp_path):
    p = tmp_path / "empty.wav"
    _write_raw(p, np.zeros(0, dtype=np.int16))
    with pytest.raises(EmptyAudioError):
        read_wav(p)


def test_clip_invariants():
    with pytest.raises(ValueError):
        AudioClip([0.0, 1.5], 16000)
    with pytest.raises(ValueError):
        AudioClip([0.0], 0)
