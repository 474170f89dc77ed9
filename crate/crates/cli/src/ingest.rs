//! Reading and writing streams in the three on-disk formats.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use densityseek_core::Bitstream;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// `0` and `1` characters; whitespace is ignored.
    Ascii,
    /// An 8-byte little-endian bit count, then the bits, most significant
    /// bit of each byte first, zero-padded to a whole byte.
    Packed,
    /// DNA sequence: G and C are ones, A and T zeroes.
    Fasta,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "packed" => Ok(Format::Packed),
            "fasta" => Ok(Format::Fasta),
            other => Err(format!("unknown format {other:?} (expected ascii, packed or fasta)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Ascii => "ascii",
            Format::Packed => "packed",
            Format::Fasta => "fasta",
        })
    }
}

/// What to do with a FASTA symbol other than A, C, G or T.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AmbiguousPolicy {
    #[default]
    Zero,
    One,
    Error,
}

impl FromStr for AmbiguousPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "zero" => Ok(AmbiguousPolicy::Zero),
            "one" => Ok(AmbiguousPolicy::One),
            "error" => Ok(AmbiguousPolicy::Error),
            other => Err(format!("unknown policy {other:?} (expected zero, one or error)")),
        }
    }
}

/// A decoded stream plus any warnings raised while decoding it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ingested {
    pub stream: Bitstream,
    pub warnings: Vec<String>,
}

pub fn ingest(path: &Path, format: Format, policy: AmbiguousPolicy) -> Result<Ingested, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    decode(&bytes, format, policy).map_err(|message| CliError::Input {
        path: path.to_owned(),
        message,
    })
}

/// Decodes a whole file. Empty streams are rejected.
pub fn decode(bytes: &[u8], format: Format, policy: AmbiguousPolicy) -> Result<Ingested, String> {
    let mut warnings = Vec::new();
    let stream = match format {
        Format::Ascii => decode_ascii(bytes)?,
        Format::Packed => decode_packed(bytes)?,
        Format::Fasta => decode_fasta(bytes, policy, &mut warnings)?,
    };
    if stream.is_empty() {
        return Err("empty input".to_owned());
    }
    Ok(Ingested { stream, warnings })
}

fn decode_ascii(bytes: &[u8]) -> Result<Bitstream, String> {
    let mut bits = Vec::with_capacity(bytes.len());
    for (offset, &b) in bytes.iter().enumerate() {
        match b {
            b'0' => bits.push(false),
            b'1' => bits.push(true),
            b if b.is_ascii_whitespace() => {}
            b => {
                return Err(format!(
                    "invalid byte {:?} at offset {offset}",
                    char::from(b)
                ))
            }
        }
    }
    Ok(Bitstream::from_bits(bits))
}

fn decode_packed(bytes: &[u8]) -> Result<Bitstream, String> {
    let Some((header, payload)) = bytes.split_first_chunk::<8>() else {
        return Err("packed input shorter than its 8-byte header".to_owned());
    };
    let n = u64::from_le_bytes(*header);
    let want = n.div_ceil(8);
    if payload.len() as u64 != want {
        return Err(format!(
            "header announces {n} bits ({want} bytes) but {} payload bytes follow",
            payload.len()
        ));
    }
    let n = n as usize;
    Ok(Bitstream::from_bits(
        (0..n).map(|i| payload[i / 8] & (0x80 >> (i % 8)) != 0),
    ))
}

fn decode_fasta(
    bytes: &[u8],
    policy: AmbiguousPolicy,
    warnings: &mut Vec<String>,
) -> Result<Bitstream, String> {
    let text = std::str::from_utf8(bytes).map_err(|e| format!("not valid UTF-8: {e}"))?;
    let mut lines = text.lines().enumerate().skip_while(|(_, l)| l.trim().is_empty());
    match lines.next() {
        Some((_, l)) if l.starts_with('>') => {}
        Some((k, _)) => return Err(format!("line {}: expected a '>' header", k + 1)),
        None => return Err("empty input".to_owned()),
    }
    let mut bits = Vec::new();
    let mut ambiguous = 0usize;
    let mut extra_records = 0usize;
    for (k, line) in lines {
        if line.starts_with('>') {
            extra_records += 1;
            continue;
        }
        if extra_records > 0 || line.starts_with(';') {
            continue;
        }
        for (col, ch) in line.chars().enumerate() {
            let bit = match ch.to_ascii_uppercase() {
                'G' | 'C' => true,
                'A' | 'T' => false,
                c if c.is_whitespace() => continue,
                c => {
                    ambiguous += 1;
                    match policy {
                        AmbiguousPolicy::Zero => false,
                        AmbiguousPolicy::One => true,
                        AmbiguousPolicy::Error => {
                            return Err(format!("line {} column {}: ambiguous base {c:?}", k + 1, col + 1))
                        }
                    }
                }
            };
            bits.push(bit);
        }
    }
    if ambiguous > 0 {
        let as_bit = if policy == AmbiguousPolicy::One { 1 } else { 0 };
        warnings.push(format!("{ambiguous} ambiguous bases read as {as_bit}"));
    }
    if extra_records > 0 {
        warnings.push(format!("ignored {extra_records} further FASTA records"));
    }
    Ok(Bitstream::from_bits(bits))
}

/// Serialises a stream; `decode` of the result gives the stream back.
/// `label` becomes the FASTA header line.
pub fn encode(stream: &Bitstream, format: Format, label: &str) -> Vec<u8> {
    match format {
        Format::Ascii => {
            let mut out: Vec<u8> = stream.iter().map(|b| if b { b'1' } else { b'0' }).collect();
            out.push(b'\n');
            out
        }
        Format::Packed => {
            let mut out = (stream.len() as u64).to_le_bytes().to_vec();
            out.resize(8 + stream.len().div_ceil(8), 0);
            for (i, bit) in stream.iter().enumerate() {
                if bit {
                    out[8 + i / 8] |= 0x80 >> (i % 8);
                }
            }
            out
        }
        Format::Fasta => {
            let mut out = format!(">{label}\n").into_bytes();
            let bases: Vec<u8> = stream.iter().map(|b| if b { b'G' } else { b'A' }).collect();
            for line in bases.chunks(60) {
                out.extend_from_slice(line);
                out.push(b'\n');
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(text: &str) -> Bitstream {
        text.parse().unwrap()
    }

    #[test]
    fn ascii() {
        let got = decode(b"0101 1010\n1100\n", Format::Ascii, AmbiguousPolicy::Zero).unwrap();
        assert_eq!(got.stream, bits("010110101100"));
        assert!(decode(b"01x", Format::Ascii, AmbiguousPolicy::Zero).unwrap_err().contains("offset 2"));
        assert_eq!(decode(b"", Format::Ascii, AmbiguousPolicy::Zero).unwrap_err(), "empty input");
        assert_eq!(decode(b" \n", Format::Ascii, AmbiguousPolicy::Zero).unwrap_err(), "empty input");
    }

    #[test]
    fn packed() {
        let mut file = 10u64.to_le_bytes().to_vec();
        file.extend([0b1011_0000, 0b0100_0000]);
        let got = decode(&file, Format::Packed, AmbiguousPolicy::Zero).unwrap();
        assert_eq!(got.stream, bits("1011000001"));
        assert_eq!(encode(&got.stream, Format::Packed, ""), file);
        assert!(decode(&file[..9], Format::Packed, AmbiguousPolicy::Zero).is_err());
        assert!(decode(&[1, 0], Format::Packed, AmbiguousPolicy::Zero).is_err());
        let empty = 0u64.to_le_bytes();
        assert_eq!(decode(&empty, Format::Packed, AmbiguousPolicy::Zero).unwrap_err(), "empty input");
    }

    #[test]
    fn fasta() {
        let got = decode(b">x\nGATTACA\n", Format::Fasta, AmbiguousPolicy::Zero).unwrap();
        assert_eq!(got.stream, bits("1000010"));
        assert!(got.warnings.is_empty());

        let text = b">x\ngaNc\nTT\n>y\nGGGG\n";
        let got = decode(text, Format::Fasta, AmbiguousPolicy::Zero).unwrap();
        assert_eq!(got.stream, bits("100100"));
        assert_eq!(got.warnings.len(), 2);
        let got = decode(text, Format::Fasta, AmbiguousPolicy::One).unwrap();
        assert_eq!(got.stream, bits("101100"));
        let err = decode(text, Format::Fasta, AmbiguousPolicy::Error).unwrap_err();
        assert!(err.contains("line 2 column 3"), "{err}");

        assert!(decode(b"GATTACA\n", Format::Fasta, AmbiguousPolicy::Zero).is_err());
        assert!(decode(b">only a header\n", Format::Fasta, AmbiguousPolicy::Zero).is_err());
    }

    #[test]
    fn encode_decode_round_trip() {
        let s = bits(&"0110100110010110".repeat(9));
        for format in [Format::Ascii, Format::Packed, Format::Fasta] {
            let bytes = encode(&s, format, "test");
            let back = decode(&bytes, format, AmbiguousPolicy::Error).unwrap();
            assert_eq!(back.stream, s, "{format}");
            assert_eq!(encode(&back.stream, format, "test"), bytes);
        }
    }
}
