/**
 * Application wiring: create a game, let the human play Bob, show Alice's
 * replies and the live S/M annotations.  All rules live server-side; a 409
 * re-syncs by re-fetching the snapshot.
 */
import { renderBoard, renderChips, renderMoveLog, renderPalette } from "./board.js";
import { BoardModel, buildBoardModel, EdgeView } from "./model.js";
import { GameClient, HttpTransport, ProtocolError, Snapshot } from "./protocol.js";

const DEFAULT_TREE = "10\n0 1\n0 2\n0 3\n0 4\n4 5\n5 6\n2 7\n7 8\n8 9\n";

interface Ui {
  svg: SVGSVGElement;
  chips: HTMLElement;
  log: HTMLElement;
  palette: HTMLElement;
  status: HTMLElement;
  error: HTMLElement;
  hint: HTMLElement;
}

export class App {
  private client: GameClient;
  private snapshot: Snapshot | null = null;
  private model: BoardModel | null = null;
  private selected: number | null = null;

  constructor(private ui: Ui, client?: GameClient) {
    this.client = client ?? new GameClient(new HttpTransport());
  }

  async start(tree: string = DEFAULT_TREE, k?: number): Promise<void> {
    this.snapshot = await this.client.createGame({ tree, k });
    this.selected = null;
    this.refresh();
  }

  private refresh(): void {
    if (!this.snapshot) return;
    this.model = buildBoardModel(this.snapshot);
    const model = this.model;
    renderBoard(this.ui.svg, model, { onEdgeClick: (e) => this.pickEdge(e) }, this.selected);
    renderChips(this.ui.chips, model);
    renderMoveLog(this.ui.log, model);
    const feas =
      this.selected !== null
        ? model.edges.find((e) => e.id === this.selected)?.feasible ?? []
        : [];
    renderPalette(this.ui.palette, model.k, feas, (c) => this.submitColour(c));
    const last = model.lastAlice;
    this.ui.status.textContent =
      model.outcome !== "ongoing"
        ? `game over: ${model.outcome.replace("_", " ")}`
        : model.humanTurn
          ? `your turn (Bob) - move ${model.moveNo}` +
            (last?.caseTag ? ` - Alice played ${last.caseTag}` : "")
          : "engine to move";
  }

  private pickEdge(edge: EdgeView): void {
    this.selected = edge.id;
    this.ui.error.textContent = "";
    this.refresh();
  }

  async submitColour(colour: number): Promise<void> {
    if (!this.snapshot || this.selected === null) return;
    await this.submit({ move_no: this.snapshot.move_no, edge_id: this.selected, colour });
  }

  async skip(): Promise<void> {
    if (!this.snapshot) return;
    await this.submit({ move_no: this.snapshot.move_no, skip: true });
  }

  private async submit(body: {
    move_no: number;
    edge_id?: number;
    colour?: number;
    skip?: boolean;
  }): Promise<void> {
    if (!this.snapshot) return;
    try {
      const resp = await this.client.submitMove(this.snapshot.id, body);
      this.snapshot = resp.snapshot;
      this.selected = null;
      this.ui.error.textContent = "";
    } catch (err) {
      if (err instanceof ProtocolError) {
        const detail = (err.detail as { detail?: { error?: string; feasible?: number[] } })
          ?.detail;
        const msg =
          typeof detail === "object" && detail
            ? `${detail.error ?? "rejected"}${
                detail.feasible ? ` (feasible: ${detail.feasible.join(", ")})` : ""
              }`
            : String((err.detail as { detail?: string })?.detail ?? err.message);
        this.ui.error.textContent = `improper: ${msg}`;
        // re-sync after conflicts so the board can never drift
        this.snapshot = await this.client.fetchGame(this.snapshot.id);
      } else {
        throw err;
      }
    }
    this.refresh();
  }

  async showHint(): Promise<void> {
    if (!this.snapshot) return;
    try {
      const hint = await this.client.hint(this.snapshot.id);
      this.ui.hint.textContent = `oracle: ${hint.winner_under_optimal_play} wins from here`;
    } catch (err) {
      if (err instanceof ProtocolError) {
        this.ui.hint.textContent = "oracle unavailable (position too large)";
      } else {
        throw err;
      }
    }
  }

  currentModel(): BoardModel | null {
    return this.model;
  }
}

export function mount(root: Document = document): App {
  const ui: Ui = {
    svg: root.getElementById("board") as unknown as SVGSVGElement,
    chips: root.getElementById("chips") as HTMLElement,
    log: root.getElementById("log") as HTMLElement,
    palette: root.getElementById("palette") as HTMLElement,
    status: root.getElementById("status") as HTMLElement,
    error: root.getElementById("error") as HTMLElement,
    hint: root.getElementById("hint") as HTMLElement,
  };
  const app = new App(ui);
  (root.getElementById("skip") as HTMLButtonElement).addEventListener("click", () =>
    app.skip(),
  );
  (root.getElementById("hint-btn") as HTMLButtonElement).addEventListener("click", () =>
    app.showHint(),
  );
  (root.getElementById("new-game") as HTMLButtonElement).addEventListener("click", () => {
    const tree = (root.getElementById("tree-input") as HTMLTextAreaElement).value;
    void app.start(tree || undefined);
  });
  void app.start();
  return app;
}
