/** Wire types and a thin fetch client for the equilibrium service.
 *
 * The shapes below restate the service's JSON contract; the integration
 * suite pins them against a live instance so drift shows up as a failure
 * here rather than as a broken page.
 */

export interface ScenarioParams {
  A: number;
  c: number;
  T: number;
  B: number;
  b: number;
  pi_e: number;
  G: number;
  NX: number;
  h1: number;
  h2: number;
  M: number;
  P: number;
}

export type ParamKey = keyof ScenarioParams;

export type RegimeName = "money_supply" | "interest_rate";

export interface ScenarioEntry {
  name: string;
  regime: RegimeName;
  i_bar?: number;
  params: ScenarioParams;
}

export interface ScenarioDocument {
  scenarios: ScenarioEntry[];
}

export interface CompositionOut {
  C: number;
  I: number;
  G: number;
  NX: number;
}

export interface EquilibriumOut {
  name: string;
  slot: number;
  Y_star: number;
  i_star: number;
  r_star: number;
  M_realized: number;
  at_zlb: boolean;
  composition: CompositionOut;
  budget_balance: number;
  diagnostics: string[];
}

export interface SolveResponse {
  results: EquilibriumOut[];
}

export type PlotId = "islm" | "money" | "goods";

export const PLOT_IDS: readonly PlotId[] = ["islm", "money", "goods"];

export interface SeriesOut {
  curve_kind: string;
  slot: number;
  scenario: string;
  points: [number, number][];
}

export interface CurvesResponse {
  plot: string;
  series: SeriesOut[];
}

export interface GridBody {
  min: number;
  max: number;
  n: number;
}

export interface CompareColumnOut {
  slot: number;
  name: string;
  Y_star: number;
  i_star: number;
  M_realized: number;
  C: number;
  I: number;
  G: number;
  NX: number;
  budget_balance: number;
  at_zlb: boolean;
}

export interface CompareDeltaOut {
  from_slot: number;
  to_slot: number;
  Y_star: number;
  i_star: number;
  M_realized: number;
  C: number;
  I: number;
  G: number;
  NX: number;
  budget_balance: number;
}

export interface CompareResponse {
  columns: CompareColumnOut[];
  deltas: CompareDeltaOut[];
}

export interface ApiError {
  code: "BadRequest" | "InvalidParameters" | "UnknownPlot" | "Internal";
  message: string;
  field_path?: string | null;
}

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly payload: ApiError | null,
  ) {
    super(
      payload
        ? `${payload.code}: ${payload.message}`
        : `service returned HTTP ${status}`,
    );
    this.name = "ServiceError";
  }
}

export const DEFAULT_BASE_URL = "http://127.0.0.1:8080";

/** Base URL from the page's ?api=... query parameter, else the fallback. */
export function resolveBaseUrl(
  search: string,
  fallback: string = DEFAULT_BASE_URL,
): string {
  const given = new URLSearchParams(search).get("api");
  if (!given) return fallback;
  return given.replace(/\/+$/, "");
}

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export class ApiClient {
  private readonly fetcher: FetchLike;

  constructor(
    readonly base: string,
    fetcher?: FetchLike,
  ) {
    this.fetcher = fetcher ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(
    method: "GET" | "POST",
    path: string,
    body?: unknown,
  ): Promise<T> {
    const resp = await this.fetcher(`${this.base}${path}`, {
      method,
      headers: body === undefined ? {} : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!resp.ok) {
      let payload: ApiError | null = null;
      try {
        payload = (await resp.json()) as ApiError;
      } catch {
        // non-JSON error body; keep the bare status
      }
      throw new ServiceError(resp.status, payload);
    }
    return (await resp.json()) as T;
  }

  defaults(): Promise<ScenarioDocument> {
    return this.request("GET", "/api/v1/defaults");
  }

  solve(document: ScenarioDocument): Promise<SolveResponse> {
    return this.request("POST", "/api/v1/solve", document);
  }

  curves(
    document: ScenarioDocument,
    plot: PlotId,
    slot?: number,
    grid?: GridBody,
  ): Promise<CurvesResponse> {
    const body: Record<string, unknown> = { document, plot };
    if (slot !== undefined) body.slot = slot;
    if (grid !== undefined) body.grid = grid;
    return this.request("POST", "/api/v1/curves", body);
  }

  compare(
    document: ScenarioDocument,
    slots: number[],
  ): Promise<CompareResponse> {
    return this.request("POST", "/api/v1/compare", { document, slots });
  }

  async health(): Promise<string> {
    const resp = await this.fetcher(`${this.base}/healthz`, { method: "GET" });
    if (!resp.ok) throw new ServiceError(resp.status, null);
    return resp.text();
  }
}
