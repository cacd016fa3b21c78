/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_bipartition_free: (a: number, b: number) => void;
export const __wbg_spectrum_free: (a: number, b: number) => void;
export const __wbg_threecut_free: (a: number, b: number) => void;
export const bipartition: (a: number, b: number, c: number, d: number) => [number, number, number];
export const bipartition_cut: (a: number) => bigint;
export const bipartition_edges: (a: number) => [number, number];
export const bipartition_energy: (a: number) => number;
export const bipartition_m: (a: number) => bigint;
export const bipartition_n: (a: number) => number;
export const bipartition_sides: (a: number) => [number, number];
export const bipartition_surplus: (a: number) => number;
export const spectrum: (a: number, b: number, c: number) => [number, number, number];
export const spectrum_certificate: (a: number) => number;
export const spectrum_edges: (a: number) => [number, number];
export const spectrum_eigenvalues: (a: number) => [number, number];
export const spectrum_energy: (a: number) => number;
export const spectrum_n: (a: number) => number;
export const threeCut: (a: number, b: number, c: number, d: number) => [number, number, number];
export const threecut_cut: (a: number) => bigint;
export const threecut_m: (a: number) => bigint;
export const threecut_n: (a: number) => number;
export const threecut_parts: (a: number) => [number, number];
export const threecut_surplus: (a: number) => number;
export const threecut_surplusText: (a: number) => [number, number];
export const threecut_triples: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
