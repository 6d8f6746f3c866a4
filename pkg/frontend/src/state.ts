import type { BarcodeDoc, TeamEntry, TeamSummary, TradeReport } from './api';

export type PendingTrade = {
  outgoing: string;
  incomingTeam: string;
  incomingPlayer: string;
};

export type ViewState = {
  teams: TeamEntry[];
  selectedTeam: string | null;
  summary: TeamSummary | null;
  barcode: BarcodeDoc | null;
  pending: PendingTrade;
  report: TradeReport | null;
};

export const initialState = (): ViewState => ({
  teams: [],
  selectedTeam: null,
  summary: null,
  barcode: null,
  pending: { outgoing: '', incomingTeam: '', incomingPlayer: '' },
  report: null,
});

// Latest-wins guard for in-flight requests: each begin() invalidates every
// token handed out before it, so late responses for old selections drop.
export class RequestGate {
  private current = 0;

  begin(): number {
    this.current += 1;
    return this.current;
  }

  isCurrent(token: number): boolean {
    return token === this.current;
  }
}
