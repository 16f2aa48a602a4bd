//! wasm-bindgen surface for the browser demo in `www/`.

pub mod demo;

use wasm_bindgen::prelude::*;

use demo::{DemoSequence, SegmentSummary};

fn js_err(e: maxseg::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub struct Sequence {
    inner: DemoSequence,
}

#[wasm_bindgen]
impl Sequence {
    /// Numbers separated by spaces or commas, optionally `value:weight`.
    #[wasm_bindgen(js_name = fromNumbers)]
    pub fn from_numbers(text: &str) -> Result<Sequence, JsError> {
        DemoSequence::parse_numbers(text)
            .map(|inner| Sequence { inner })
            .map_err(js_err)
    }

    /// DNA text scored with `gc` or `huang:P`.
    #[wasm_bindgen(js_name = fromDna)]
    pub fn from_dna(text: &str, mapping: &str) -> Result<Sequence, JsError> {
        DemoSequence::parse_dna(text, mapping)
            .map(|inner| Sequence { inner })
            .map_err(js_err)
    }

    #[wasm_bindgen(getter)]
    pub fn length(&self) -> usize {
        self.inner.len()
    }

    pub fn values(&self) -> Vec<f64> {
        self.inner.values()
    }

    pub fn weights(&self) -> Vec<f64> {
        self.inner.weights()
    }

    /// Densest segment with `minWidth <= width <= maxWidth` (`max` for none).
    pub fn densest(&self, min_width: &str, max_width: &str) -> Result<Segment, JsError> {
        self.inner
            .densest(min_width, max_width)
            .map(|s| Segment { inner: s })
            .map_err(js_err)
    }

    /// Right-skew partition as a flat `[start0, end0, start1, end1, ...]`.
    pub fn partition(&self) -> Result<Vec<u32>, JsError> {
        let blocks = self.inner.partition().map_err(js_err)?;
        Ok(blocks
            .iter()
            .flat_map(|&(s, e)| [s as u32, e as u32])
            .collect())
    }

    /// Density of each partition block.
    #[wasm_bindgen(js_name = partitionDensities)]
    pub fn partition_densities(&self) -> Result<Vec<f64>, JsError> {
        let blocks = self.inner.partition().map_err(js_err)?;
        self.inner.block_densities(&blocks).map_err(js_err)
    }
}

#[wasm_bindgen]
pub struct Segment {
    inner: SegmentSummary,
}

#[wasm_bindgen]
impl Segment {
    #[wasm_bindgen(getter)]
    pub fn start(&self) -> usize {
        self.inner.start
    }

    #[wasm_bindgen(getter)]
    pub fn end(&self) -> usize {
        self.inner.end
    }

    #[wasm_bindgen(getter)]
    pub fn width(&self) -> String {
        self.inner.width.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn sum(&self) -> String {
        self.inner.sum.clone()
    }

    /// Density rounded to 9 decimals.
    #[wasm_bindgen(getter)]
    pub fn density(&self) -> String {
        self.inner.density.clone()
    }

    #[wasm_bindgen(getter, js_name = densityValue)]
    pub fn density_value(&self) -> f64 {
        self.inner.density_value
    }

    #[wasm_bindgen(getter)]
    pub fn algorithm(&self) -> String {
        self.inner.algorithm.to_string()
    }
}
