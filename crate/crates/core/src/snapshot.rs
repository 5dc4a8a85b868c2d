//! Density-matrix snapshots: a short text header followed by the raw
//! grid payload.
//!
//! The header is human-readable (grid size, domain extent, time stamp);
//! the payload is the physical cells of both components as little-endian
//! `f64`, imaginary part first, row-major in `(ix, iy)`.  Floats in the
//! header are printed with Rust's shortest round-trip formatting, so a
//! write/read cycle reproduces the state bit for bit.  Ghost cells are
//! not stored — they are regenerated from the boundary policy on read.

use crate::grid::{BoundaryPolicy, Grid, State, GHOST_WIDTH, RHO_I, RHO_R};
use crate::Error;
use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

const MAGIC: &str = "lindblad-kt snapshot 1";

fn format_error(msg: impl Into<String>) -> Error {
    Error::SnapshotFormat(msg.into())
}

/// Writes `state` to `path` (physical cells only).
pub fn write_snapshot(state: &State, path: &Path) -> Result<(), Error> {
    let grid = state.grid;
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{MAGIC}")?;
    writeln!(w, "n_cells {}", grid.n_cells)?;
    writeln!(w, "extent_l {}", grid.extent_l)?;
    writeln!(w, "time {}", state.time)?;
    writeln!(w, "components rho_I rho_R")?;
    writeln!(w, "payload f64le row-major")?;
    writeln!(w)?;
    let mut row_bytes = Vec::with_capacity(grid.n_cells * 8);
    for comp in [RHO_I, RHO_R] {
        for ix in grid.phys_range() {
            row_bytes.clear();
            for iy in grid.phys_range() {
                row_bytes.extend_from_slice(&state.u[[comp, ix, iy]].to_le_bytes());
            }
            w.write_all(&row_bytes)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Reads one header line (bytes up to `\n`) without consuming any payload.
fn read_header_line(r: &mut impl Read) -> Result<String, Error> {
    let mut bytes = Vec::new();
    let mut byte = [0u8; 1];
    loop {
        match r.read(&mut byte)? {
            0 => return Err(format_error("truncated header")),
            _ => {
                if byte[0] == b'\n' {
                    break;
                }
                bytes.push(byte[0]);
                if bytes.len() > 256 {
                    return Err(format_error("header line too long"));
                }
            }
        }
    }
    String::from_utf8(bytes).map_err(|_| format_error("header is not UTF-8"))
}

fn header_field<'a>(line: &'a str, name: &str) -> Result<&'a str, Error> {
    line.strip_prefix(name)
        .map(str::trim)
        .ok_or_else(|| format_error(format!("expected `{name} ...`, got `{line}`")))
}

/// Reads a snapshot back, regenerating ghost cells with `policy`.
pub fn read_snapshot(path: &Path, policy: BoundaryPolicy) -> Result<State, Error> {
    let mut r = BufReader::new(File::open(path)?);
    if read_header_line(&mut r)? != MAGIC {
        return Err(format_error("not a snapshot file (bad magic line)"));
    }
    let n_cells: usize = header_field(&read_header_line(&mut r)?, "n_cells")?
        .parse()
        .map_err(|_| format_error("n_cells is not an integer"))?;
    let extent_l: f64 = header_field(&read_header_line(&mut r)?, "extent_l")?
        .parse()
        .map_err(|_| format_error("extent_l is not a number"))?;
    let time: f64 = header_field(&read_header_line(&mut r)?, "time")?
        .parse()
        .map_err(|_| format_error("time is not a number"))?;
    let components_line = read_header_line(&mut r)?;
    let components = header_field(&components_line, "components")?;
    if components != "rho_I rho_R" {
        return Err(format_error(format!("unsupported components `{components}`")));
    }
    let payload_line = read_header_line(&mut r)?;
    let payload = header_field(&payload_line, "payload")?;
    if payload != "f64le row-major" {
        return Err(format_error(format!("unsupported payload encoding `{payload}`")));
    }
    if !read_header_line(&mut r)?.is_empty() {
        return Err(format_error("missing blank line after header"));
    }

    let grid = Grid::new(extent_l, n_cells)?;
    let mut state = State::zeros(grid);
    let mut row_bytes = vec![0u8; n_cells * 8];
    for comp in [RHO_I, RHO_R] {
        for ix in grid.phys_range() {
            r.read_exact(&mut row_bytes).map_err(|e| {
                if e.kind() == std::io::ErrorKind::UnexpectedEof {
                    format_error(format!(
                        "payload ends early (expected {} cells per component)",
                        n_cells * n_cells
                    ))
                } else {
                    Error::Io(e)
                }
            })?;
            for (k, chunk) in row_bytes.chunks_exact(8).enumerate() {
                let iy = GHOST_WIDTH + k;
                state.u[[comp, ix, iy]] =
                    f64::from_le_bytes(chunk.try_into().expect("8-byte chunk"));
            }
        }
    }
    let mut tail = [0u8; 1];
    if r.read(&mut tail)? != 0 {
        return Err(format_error("trailing data after payload"));
    }
    state.time = time;
    crate::grid::apply_boundary(&mut state, policy);
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagnostics::trace;
    use crate::grid::init_from_density;
    use std::fs;
    use tempfile::tempdir;

    fn sample_state() -> State {
        let grid = Grid::new(12.0, 10).unwrap();
        let mut state = init_from_density(grid, |x, y| {
            ((-0.3 * (x * x + y * y)).exp(), 0.05 * (x - y))
        })
        .unwrap();
        state.time = 7.25;
        state
    }

    #[test]
    fn round_trip_is_bit_exact_on_physical_cells() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("state.bin");
        let state = sample_state();
        write_snapshot(&state, &path).unwrap();
        let back = read_snapshot(&path, BoundaryPolicy::MirrorNegate).unwrap();

        assert_eq!(back.time, state.time);
        assert_eq!(back.grid.n_cells, state.grid.n_cells);
        assert_eq!(back.grid.extent_l, state.grid.extent_l);
        for comp in [RHO_I, RHO_R] {
            for ix in state.grid.phys_range() {
                for iy in state.grid.phys_range() {
                    assert_eq!(
                        back.u[[comp, ix, iy]].to_bits(),
                        state.u[[comp, ix, iy]].to_bits(),
                        "mismatch at ({comp}, {ix}, {iy})"
                    );
                }
            }
        }
        assert_eq!(trace(&back), trace(&state));
    }

    #[test]
    fn ghosts_come_from_the_requested_policy_not_the_file() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("state.bin");
        let mut state = sample_state();
        // Poison the ghosts before writing; they must not leak into the file.
        state.u[[RHO_R, 0, 5]] = f64::NAN;
        write_snapshot(&state, &path).unwrap();

        let back = read_snapshot(&path, BoundaryPolicy::ZeroGhost).unwrap();
        assert_eq!(back.u[[RHO_R, 0, 5]], 0.0);

        let mirrored = read_snapshot(&path, BoundaryPolicy::MirrorNegate).unwrap();
        let g = mirrored.grid;
        // Mirror-negate reflects the first interior rows with a sign flip.
        for iy in g.phys_range() {
            assert_eq!(
                mirrored.u[[RHO_R, GHOST_WIDTH - 1, iy]],
                -mirrored.u[[RHO_R, GHOST_WIDTH, iy]]
            );
        }
    }

    #[test]
    fn truncated_payload_is_a_format_error() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("state.bin");
        write_snapshot(&sample_state(), &path).unwrap();
        let bytes = fs::read(&path).unwrap();
        fs::write(&path, &bytes[..bytes.len() - 17]).unwrap();

        let err = read_snapshot(&path, BoundaryPolicy::ZeroGhost).unwrap_err();
        assert!(matches!(err, Error::SnapshotFormat(_)), "{err:?}");
    }

    #[test]
    fn trailing_garbage_is_a_format_error() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("state.bin");
        write_snapshot(&sample_state(), &path).unwrap();
        let mut bytes = fs::read(&path).unwrap();
        bytes.extend_from_slice(&[0u8; 4]);
        fs::write(&path, &bytes).unwrap();

        let err = read_snapshot(&path, BoundaryPolicy::ZeroGhost).unwrap_err();
        assert!(matches!(err, Error::SnapshotFormat(_)), "{err:?}");
    }

    #[test]
    fn wrong_magic_is_rejected() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("state.bin");
        fs::write(&path, b"some other file\n").unwrap();
        let err = read_snapshot(&path, BoundaryPolicy::ZeroGhost).unwrap_err();
        assert!(matches!(err, Error::SnapshotFormat(_)), "{err:?}");
    }

    #[test]
    fn header_advertises_the_stored_time_readably() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("state.bin");
        write_snapshot(&sample_state(), &path).unwrap();
        let bytes = fs::read(&path).unwrap();
        let header_end = bytes.windows(2).position(|w| w == b"\n\n").unwrap();
        let header = std::str::from_utf8(&bytes[..header_end]).unwrap();
        assert!(header.contains("time 7.25"), "{header}");
        assert!(header.contains("n_cells 10"), "{header}");
    }
}
