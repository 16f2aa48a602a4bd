/* tslint:disable */
/* eslint-disable */

export class Segment {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly algorithm: string;
    readonly densityValue: number;
    /**
     * Density rounded to 9 decimals.
     */
    readonly density: string;
    readonly end: number;
    readonly start: number;
    readonly sum: string;
    readonly width: string;
}

export class Sequence {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Densest segment with `minWidth <= width <= maxWidth` (`max` for none).
     */
    densest(min_width: string, max_width: string): Segment;
    /**
     * DNA text scored with `gc` or `huang:P`.
     */
    static fromDna(text: string, mapping: string): Sequence;
    /**
     * Numbers separated by spaces or commas, optionally `value:weight`.
     */
    static fromNumbers(text: string): Sequence;
    /**
     * Density of each partition block.
     */
    partitionDensities(): Float64Array;
    /**
     * Right-skew partition as a flat `[start0, end0, start1, end1, ...]`.
     */
    partition(): Uint32Array;
    values(): Float64Array;
    weights(): Float64Array;
    readonly length: number;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_segment_free: (a: number, b: number) => void;
    readonly __wbg_sequence_free: (a: number, b: number) => void;
    readonly segment_algorithm: (a: number) => [number, number];
    readonly segment_density: (a: number) => [number, number];
    readonly segment_densityValue: (a: number) => number;
    readonly segment_end: (a: number) => number;
    readonly segment_start: (a: number) => number;
    readonly segment_sum: (a: number) => [number, number];
    readonly segment_width: (a: number) => [number, number];
    readonly sequence_densest: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly sequence_fromDna: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly sequence_fromNumbers: (a: number, b: number) => [number, number, number];
    readonly sequence_length: (a: number) => number;
    readonly sequence_partition: (a: number) => [number, number, number, number];
    readonly sequence_partitionDensities: (a: number) => [number, number, number, number];
    readonly sequence_values: (a: number) => [number, number];
    readonly sequence_weights: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
