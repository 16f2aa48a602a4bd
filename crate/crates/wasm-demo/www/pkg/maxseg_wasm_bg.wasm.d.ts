/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_segment_free: (a: number, b: number) => void;
export const __wbg_sequence_free: (a: number, b: number) => void;
export const segment_algorithm: (a: number) => [number, number];
export const segment_density: (a: number) => [number, number];
export const segment_densityValue: (a: number) => number;
export const segment_end: (a: number) => number;
export const segment_start: (a: number) => number;
export const segment_sum: (a: number) => [number, number];
export const segment_width: (a: number) => [number, number];
export const sequence_densest: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const sequence_fromDna: (a: number, b: number, c: number, d: number) => [number, number, number];
export const sequence_fromNumbers: (a: number, b: number) => [number, number, number];
export const sequence_length: (a: number) => number;
export const sequence_partition: (a: number) => [number, number, number, number];
export const sequence_partitionDensities: (a: number) => [number, number, number, number];
export const sequence_values: (a: number) => [number, number];
export const sequence_weights: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
