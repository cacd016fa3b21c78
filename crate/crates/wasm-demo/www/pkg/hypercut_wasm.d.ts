/* tslint:disable */
/* eslint-disable */

/**
 * A spectral 2-cut of `G(n, p)`.
 */
export class Bipartition {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    edges(): Uint32Array;
    /**
     * Side (0 or 1) of every vertex.
     */
    sides(): Uint8Array;
    readonly cut: bigint;
    readonly energy: number;
    readonly m: bigint;
    readonly n: number;
    /**
     * `cut - m/2`.
     */
    readonly surplus: number;
}

/**
 * Spectrum of the adjacency matrix of `G(n, p)`.
 */
export class Spectrum {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Endpoints of every edge, two entries per edge.
     */
    edges(): Uint32Array;
    /**
     * Eigenvalues in descending order.
     */
    eigenvalues(): Float64Array;
    /**
     * `-½⟨X, A⟩` for the negative-eigenspace projector `X`.
     */
    readonly certificate: number;
    readonly energy: number;
    readonly n: number;
}

/**
 * A 3-cut of a random 3-graph from the sampling solver.
 */
export class ThreeCut {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Part (0, 1 or 2) of every vertex.
     */
    parts(): Uint8Array;
    /**
     * Vertices of every triple, three entries per edge.
     */
    triples(): Uint32Array;
    readonly cut: bigint;
    readonly m: bigint;
    readonly n: number;
    /**
     * The surplus as an exact fraction.
     */
    readonly surplusText: string;
    /**
     * `cut - 2m/9`.
     */
    readonly surplus: number;
}

export function bipartition(n: number, p: number, seed: number, trials: number): Bipartition;

export function spectrum(n: number, p: number, seed: number): Spectrum;

export function threeCut(n: number, p: number, seed: number, rounds: number): ThreeCut;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_bipartition_free: (a: number, b: number) => void;
    readonly __wbg_spectrum_free: (a: number, b: number) => void;
    readonly __wbg_threecut_free: (a: number, b: number) => void;
    readonly bipartition: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly bipartition_cut: (a: number) => bigint;
    readonly bipartition_edges: (a: number) => [number, number];
    readonly bipartition_energy: (a: number) => number;
    readonly bipartition_m: (a: number) => bigint;
    readonly bipartition_n: (a: number) => number;
    readonly bipartition_sides: (a: number) => [number, number];
    readonly bipartition_surplus: (a: number) => number;
    readonly spectrum: (a: number, b: number, c: number) => [number, number, number];
    readonly spectrum_certificate: (a: number) => number;
    readonly spectrum_edges: (a: number) => [number, number];
    readonly spectrum_eigenvalues: (a: number) => [number, number];
    readonly spectrum_energy: (a: number) => number;
    readonly spectrum_n: (a: number) => number;
    readonly threeCut: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly threecut_cut: (a: number) => bigint;
    readonly threecut_m: (a: number) => bigint;
    readonly threecut_n: (a: number) => number;
    readonly threecut_parts: (a: number) => [number, number];
    readonly threecut_surplus: (a: number) => number;
    readonly threecut_surplusText: (a: number) => [number, number];
    readonly threecut_triples: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
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
