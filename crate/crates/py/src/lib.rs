use pyo3::prelude::*;

#[pymodule]
fn lganno_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
