/* tslint:disable */
/* eslint-disable */

/**
 * Records `[b, 2 - C_b, 3 - 2C_b]` for `b` in `[0, b_max]`.
 */
export function bounds_curve(kernel_name: string, b_max: number, steps: number): Float64Array;

/**
 * Computes zeros in `(t, 2t]` and returns records `[α, empirical, theory]`
 * of the normalised form factor for `α` in `(0, alpha_max]`.
 */
export function form_factor(t: number, alpha_max: number, steps: number): Float64Array;

/**
 * `[simple, simple-critical]` failure thresholds.
 */
export function thresholds(kernel_name: string): Float64Array;

/**
 * Records `[x, Re K_b(x + iy)]` for `x` in `[-x_max, x_max]`, `|y| < b`.
 */
export function tsang_profile(kernel_name: string, b: number, y: number, x_max: number, steps: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly bounds_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly form_factor: (a: number, b: number, c: number) => [number, number, number, number];
    readonly thresholds: (a: number, b: number) => [number, number, number, number];
    readonly tsang_profile: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
