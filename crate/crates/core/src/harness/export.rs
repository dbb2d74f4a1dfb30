use std::fs::File;
use std::path::Path;

use crate::error::{invalid, io_at, Error, Result};
use crate::record::RunRecord;
use crate::scalar::Scalar;

/// 17 significant digits: enough to round-trip any f64.
fn fmt_full(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv_err(path: &Path) -> impl FnOnce(csv::Error) -> Error + '_ {
    move |source| Error::Csv { path: path.to_path_buf(), source }
}

/// Writes `iteration,best_fitness`, one row per iteration `0..=K`.
pub fn export_convergence<T: Scalar>(record: &RunRecord<T>, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    if record.curve.is_empty() {
        return Err(invalid("run record has an empty curve"));
    }
    let file = File::create(path).map_err(io_at(path))?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(["iteration", "best_fitness"]).map_err(csv_err(path))?;
    for (k, v) in record.curve.iter().enumerate() {
        w.write_record([k.to_string(), fmt_full(v.as_f64())]).map_err(csv_err(path))?;
    }
    w.flush().map_err(io_at(path))?;
    Ok(())
}

/// Reads back a file written by [`export_convergence`].
pub fn read_convergence(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    let path = path.as_ref();
    let mut r = csv::Reader::from_path(path).map_err(csv_err(path))?;
    let headers = r.headers().map_err(csv_err(path))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["iteration", "best_fitness"] {
        return Err(invalid(format!("{}: unexpected header {:?}", path.display(), headers)));
    }
    let mut out = Vec::new();
    for (i, row) in r.records().enumerate() {
        let row = row.map_err(csv_err(path))?;
        let k: usize = row[0]
            .parse()
            .map_err(|_| invalid(format!("{}: bad iteration {:?}", path.display(), &row[0])))?;
        if k != i {
            return Err(invalid(format!("{}: iteration {k} out of order", path.display())));
        }
        let v: f64 = row[1]
            .parse()
            .map_err(|_| invalid(format!("{}: bad value {:?}", path.display(), &row[1])))?;
        out.push(v);
    }
    Ok(out)
}

/// Writes recorded positions as `iteration,agent,x0,..,x{S-1}`.
pub fn export_trajectory<T: Scalar>(record: &RunRecord<T>, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let traj = record
        .trajectory
        .as_ref()
        .ok_or_else(|| invalid("run was not recorded with positions"))?;
    let dim = record.best_x.len();
    let file = File::create(path).map_err(io_at(path))?;
    let mut w = csv::Writer::from_writer(file);
    let mut header = vec!["iteration".to_string(), "agent".to_string()];
    header.extend((0..dim).map(|s| format!("x{s}")));
    w.write_record(&header).map_err(csv_err(path))?;
    for (k, swarm) in traj.iter().enumerate() {
        for (i, x) in swarm.iter().enumerate() {
            let mut row = vec![k.to_string(), i.to_string()];
            row.extend(x.iter().map(|v| fmt_full(v.as_f64())));
            w.write_record(&row).map_err(csv_err(path))?;
        }
    }
    w.flush().map_err(io_at(path))?;
    Ok(())
}
