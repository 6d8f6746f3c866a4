// Typed client for the roster-analytics HTTP API. Every number shown in the
// UI comes from these payloads; nothing is recomputed client side.

export type TeamEntry = {
  slug: string;
  name: string;
  player_count: number;
};

// [birth, death]; death is null for bars that never die.
export type Interval = [number, number | null];

export type BarcodeDoc = {
  dim0: Interval[];
  dim1: Interval[];
};

export type TunnelingInfo = {
  diameter: number;
  center: number[];
  method: string;
  starts_used: number;
};

export type TeamSummary = {
  team: string;
  top_line: number;
  mean_bar_length: number;
  h1_count: number;
  h1_total_length: number;
  sparsity_profile: number[];
  tunneling: TunnelingInfo;
  noise_fraction: number;
};

export type PlayerEntry = {
  name: string;
  stats: Record<string, number>;
};

export type TradeRequest = {
  team: string;
  outgoing: string;
  incoming_team: string;
  incoming_player: string;
};

export type TradeReport = {
  before: TeamSummary;
  after: TeamSummary;
  deltas: Record<string, number>;
  verdict: 'improved' | 'worsened' | 'neutral';
};

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  let res: Response;
  try {
    res = await fetch(base + path, {
      headers: { Accept: 'application/json', ...(init?.headers ?? {}) },
      ...init,
    });
  } catch (err) {
    throw new ApiError(0, `service unreachable: ${String(err)}`);
  }
  const body = await res.json().catch(() => null);
  if (!res.ok) {
    const message =
      body && typeof body.error === 'string' ? body.error : `HTTP ${res.status}`;
    throw new ApiError(res.status, message);
  }
  return body as T;
}

export class ApiClient {
  constructor(readonly base: string = '') {}

  listTeams(): Promise<TeamEntry[]> {
    return request<TeamEntry[]>(this.base, '/api/teams');
  }

  teamSummary(slug: string): Promise<TeamSummary> {
    return request<TeamSummary>(this.base, `/api/teams/${encodeURIComponent(slug)}/summary`);
  }

  teamBarcode(slug: string): Promise<BarcodeDoc> {
    return request<BarcodeDoc>(this.base, `/api/teams/${encodeURIComponent(slug)}/barcode`);
  }

  teamPlayers(slug: string): Promise<PlayerEntry[]> {
    return request<PlayerEntry[]>(this.base, `/api/teams/${encodeURIComponent(slug)}/players`);
  }

  evaluateTrade(trade: TradeRequest): Promise<TradeReport> {
    return request<TradeReport>(this.base, '/api/trades/evaluate', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(trade),
    });
  }
}
