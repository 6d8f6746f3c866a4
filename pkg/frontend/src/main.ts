import { ApiClient, ApiError } from './api';
import { initialState, RequestGate, ViewState } from './state';
import { summaryPanel, teamBarcodes, tradeView } from './panels';

// Single-page wiring: a team selector drives the summary/barcode view, a
// trade form POSTs what-ifs and renders the side-by-side report. The only
// routing is the team slug in the URL fragment.

const SHELL = `
<header class="topbar">
  <h1>trade explorer</h1>
  <label>team
    <select id="team-select"><option value="">choose a team</option></select>
  </label>
</header>
<div id="error-banner" class="banner" hidden></div>
<main>
  <section id="team-view" hidden>
    <h2 id="team-name"></h2>
    <div id="summary"></div>
    <div id="barcodes" class="barcodes"></div>
    <form id="trade-form">
      <label>send out <select id="out-player"></select></label>
      <label>from team <select id="in-team"></select></label>
      <label>bring in <select id="in-player"></select></label>
      <button type="submit">evaluate trade</button>
      <span id="trade-error" class="inline-error" hidden></span>
    </form>
    <div id="trade-result"></div>
  </section>
</main>`;

function fillSelect(select: HTMLSelectElement, values: [string, string][]): void {
  select.innerHTML = values
    .map(([value, label]) => `<option value="${value}">${label}</option>`)
    .join('');
}

export class App {
  readonly state: ViewState = initialState();
  private readonly teamGate = new RequestGate();
  private readonly rosterGate = new RequestGate();
  // last slug a load was started for; hashchange compares against this so
  // programmatic hash updates do not double-load the same team
  private requestedTeam: string | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: ApiClient,
  ) {
    root.innerHTML = SHELL;
    this.el<HTMLSelectElement>('team-select').addEventListener('change', (ev) => {
      const slug = (ev.target as HTMLSelectElement).value;
      if (slug) {
        window.location.hash = `team=${slug}`;
        void this.loadTeam(slug);
      }
    });
    this.el<HTMLSelectElement>('in-team').addEventListener('change', (ev) => {
      void this.loadIncomingRoster((ev.target as HTMLSelectElement).value);
    });
    this.el<HTMLFormElement>('trade-form').addEventListener('submit', (ev) => {
      ev.preventDefault();
      void this.submitTrade();
    });
    window.addEventListener('hashchange', () => {
      const slug = this.slugFromHash();
      if (slug && slug !== this.requestedTeam) {
        void this.loadTeam(slug);
      }
    });
  }

  private el<T extends HTMLElement>(id: string): T {
    return this.root.querySelector(`#${id}`) as T;
  }

  private slugFromHash(): string | null {
    const match = window.location.hash.match(/^#team=(.+)$/);
    return match ? decodeURIComponent(match[1]) : null;
  }

  private showError(message: string): void {
    const banner = this.el('error-banner');
    banner.textContent = message;
    banner.hidden = false;
  }

  async init(): Promise<void> {
    try {
      this.state.teams = await this.client.listTeams();
    } catch (err) {
      this.showError(err instanceof Error ? err.message : String(err));
      return;
    }
    const entries: [string, string][] = this.state.teams.map((t) => [t.slug, t.name]);
    const select = this.el<HTMLSelectElement>('team-select');
    fillSelect(select, [['', 'choose a team'], ...entries]);
    fillSelect(this.el<HTMLSelectElement>('in-team'), entries);
    const fromHash = this.slugFromHash();
    if (fromHash && this.state.teams.some((t) => t.slug === fromHash)) {
      select.value = fromHash;
      await this.loadTeam(fromHash);
    }
  }

  async loadTeam(slug: string): Promise<void> {
    this.requestedTeam = slug;
    const token = this.teamGate.begin();
    this.el('error-banner').hidden = true;
    try {
      const [summary, barcode, players] = await Promise.all([
        this.client.teamSummary(slug),
        this.client.teamBarcode(slug),
        this.client.teamPlayers(slug),
      ]);
      if (!this.teamGate.isCurrent(token)) {
        return;
      }
      this.state.selectedTeam = slug;
      this.state.summary = summary;
      this.state.barcode = barcode;
      this.el('team-name').textContent = summary.team;
      this.el('summary').innerHTML = summaryPanel(summary);
      this.el('barcodes').innerHTML = teamBarcodes(barcode);
      fillSelect(
        this.el<HTMLSelectElement>('out-player'),
        players.map((p) => [p.name, p.name]),
      );
      this.el<HTMLElement>('team-view').hidden = false;
      const inTeam = this.el<HTMLSelectElement>('in-team');
      if (inTeam.value) {
        await this.loadIncomingRoster(inTeam.value);
      }
    } catch (err) {
      if (!this.teamGate.isCurrent(token)) {
        return;
      }
      // no stale content behind the banner
      this.el<HTMLElement>('team-view').hidden = true;
      this.state.selectedTeam = null;
      this.state.summary = null;
      this.state.barcode = null;
      this.showError(err instanceof Error ? err.message : String(err));
    }
  }

  async loadIncomingRoster(slug: string): Promise<void> {
    const token = this.rosterGate.begin();
    try {
      const players = await this.client.teamPlayers(slug);
      if (!this.rosterGate.isCurrent(token)) {
        return;
      }
      fillSelect(
        this.el<HTMLSelectElement>('in-player'),
        players.map((p) => [p.name, p.name]),
      );
    } catch (err) {
      if (this.rosterGate.isCurrent(token)) {
        this.showError(err instanceof Error ? err.message : String(err));
      }
    }
  }

  async submitTrade(): Promise<void> {
    const errorEl = this.el('trade-error');
    errorEl.hidden = true;
    const team = this.state.selectedTeam;
    const outgoing = this.el<HTMLSelectElement>('out-player').value;
    const incomingTeam = this.el<HTMLSelectElement>('in-team').value;
    const incomingPlayer = this.el<HTMLSelectElement>('in-player').value;
    if (!team || !outgoing || !incomingTeam || !incomingPlayer) {
      errorEl.textContent = 'pick an outgoing player, a team, and an incoming player';
      errorEl.hidden = false;
      return;
    }
    this.state.pending = { outgoing, incomingTeam, incomingPlayer };
    try {
      this.state.report = await this.client.evaluateTrade({
        team,
        outgoing,
        incoming_team: incomingTeam,
        incoming_player: incomingPlayer,
      });
    } catch (err) {
      const message =
        err instanceof ApiError ? err.message : err instanceof Error ? err.message : String(err);
      errorEl.textContent = message;
      errorEl.hidden = false;
      return;
    }
    this.el('trade-result').innerHTML = tradeView(this.state.report);
  }
}

export function mountApp(root: HTMLElement, client: ApiClient): App {
  return new App(root, client);
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  const app = mountApp(document.getElementById('app') as HTMLElement, new ApiClient());
  void app.init();
}
