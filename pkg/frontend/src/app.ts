/**
 * Panel wiring: controls at the top, summary below. Control changes are
 * debounced (sliders emit bursts); at most one summarize request is in
 * flight and superseded or stale responses are never rendered.
 */

import { ApiClient, ApiRequestError } from "./api.js";
import { debounce, type Debounced } from "./debounce.js";
import { LatestWins } from "./requests.js";
import {
  ControlPanelState,
  FEMALE_RATIO_STEP,
  LENGTH_MAX,
  LENGTH_MIN,
} from "./state.js";
import {
  renderBanner,
  renderFieldErrors,
  renderServerError,
  renderSummary,
} from "./render.js";

export const DEBOUNCE_MS = 350;

export class App {
  readonly state = new ControlPanelState();
  private readonly requests = new LatestWins();
  private readonly regenerateSoon: Debounced<[]>;
  private root!: HTMLElement;
  private summaryRoot!: HTMLElement;
  private errorRoot!: HTMLElement;
  private statusNode!: HTMLElement;

  constructor(
    private readonly api: ApiClient,
    debounceMs: number = DEBOUNCE_MS,
  ) {
    this.regenerateSoon = debounce(() => void this.issueRequest(), debounceMs);
  }

  async start(root: HTMLElement): Promise<void> {
    this.root = root;
    try {
      const [places, aspects] = await Promise.all([this.api.places(), this.api.aspects()]);
      this.state.initialize(
        places.map((p) => p.place),
        aspects.map((a) => a.label),
      );
    } catch {
      renderBanner(root, "Backend unreachable; is the service running?", () => {
        void this.start(root);
      });
      return;
    }
    this.renderShell();
    void this.issueRequest(); // defaults pre-applied: L=100, fp=0.5, all aspects
  }

  /** single entry point for every control mutation */
  controlsChanged(): void {
    this.syncControlWidgets();
    if (!this.state.canGenerate) {
      this.statusNode.textContent = "select at least one aspect (or All)";
      return;
    }
    this.statusNode.textContent = "";
    this.regenerateSoon();
  }

  private async issueRequest(): Promise<void> {
    if (!this.state.canGenerate) {
      return;
    }
    const { signal, ticket } = this.requests.begin();
    this.state.inFlight = true;
    this.statusNode.textContent = "generating…";
    try {
      const response = await this.api.summarize(this.state.request(), signal);
      if (!this.requests.isCurrent(ticket)) {
        return; // superseded while in flight
      }
      if (!this.state.echoMatches(response.controls_echo)) {
        return; // stale: panel moved on since the request left
      }
      this.state.lastResponse = response;
      this.errorRoot.textContent = "";
      renderSummary(this.summaryRoot, response);
    } catch (err) {
      if (isAbort(err) || !this.requests.isCurrent(ticket)) {
        return;
      }
      if (err instanceof ApiRequestError && err.status < 500) {
        renderFieldErrors(this.errorRoot, err.payload.fields ?? { request: err.message });
      } else if (err instanceof ApiRequestError) {
        renderServerError(this.errorRoot, err.payload.request_id);
      } else {
        renderBanner(this.errorRoot, "Request failed; backend unreachable?", () => {
          void this.issueRequest();
        });
      }
    } finally {
      if (this.requests.isCurrent(ticket)) {
        this.state.inFlight = false;
        this.statusNode.textContent = "";
      }
    }
  }

  // ----- DOM construction ---------------------------------------------

  private renderShell(): void {
    this.root.textContent = "";
    const panel = document.createElement("section");
    panel.className = "controls";

    panel.appendChild(this.placeSelector());
    panel.appendChild(this.aspectGroup());
    panel.appendChild(
      this.slider("length", "Length (words)", LENGTH_MIN, LENGTH_MAX, 1, this.state.lengthWords,
        (v) => this.state.setLength(v)),
    );
    panel.appendChild(
      this.slider("female-ratio", "Female opinion ratio", 0, 1, FEMALE_RATIO_STEP,
        this.state.femaleRatio, (v) => this.state.setFemaleRatio(v)),
    );

    this.statusNode = document.createElement("p");
    this.statusNode.className = "status";
    panel.appendChild(this.statusNode);

    this.errorRoot = document.createElement("div");
    this.errorRoot.className = "errors";

    this.summaryRoot = document.createElement("section");
    this.summaryRoot.className = "summary";

    this.root.append(panel, this.errorRoot, this.summaryRoot);
    this.syncControlWidgets();
  }

  private placeSelector(): HTMLElement {
    const wrap = document.createElement("label");
    wrap.className = "place-wrap";
    wrap.textContent = "Place ";
    const select = document.createElement("select");
    select.className = "place";
    for (const place of this.state.places) {
      const option = document.createElement("option");
      option.value = place;
      option.textContent = place;
      select.appendChild(option);
    }
    select.value = this.state.place;
    select.addEventListener("change", () => {
      this.state.setPlace(select.value);
      this.controlsChanged();
    });
    wrap.appendChild(select);
    return wrap;
  }

  private aspectGroup(): HTMLElement {
    const wrap = document.createElement("fieldset");
    wrap.className = "aspects";
    const legend = document.createElement("legend");
    legend.textContent = "Aspects";
    wrap.appendChild(legend);

    const allLabel = document.createElement("label");
    allLabel.className = "aspect-all";
    const allBox = document.createElement("input");
    allBox.type = "checkbox";
    allBox.className = "aspect-all-box";
    allBox.checked = this.state.allAspects;
    allBox.addEventListener("change", () => {
      this.state.setAllAspects(allBox.checked);
      this.controlsChanged();
    });
    allLabel.append(allBox, document.createTextNode(" All"));
    wrap.appendChild(allLabel);

    for (const label of this.state.aspectLabels) {
      const item = document.createElement("label");
      item.className = "aspect";
      const box = document.createElement("input");
      box.type = "checkbox";
      box.className = "aspect-box";
      box.dataset.aspect = label;
      box.checked = this.state.selectedAspects.has(label);
      box.addEventListener("change", () => {
        this.state.toggleAspect(label, box.checked);
        this.controlsChanged();
      });
      item.append(box, document.createTextNode(` ${label}`));
      wrap.appendChild(item);
    }
    return wrap;
  }

  private slider(
    name: string,
    title: string,
    min: number,
    max: number,
    step: number,
    value: number,
    apply: (v: number) => void,
  ): HTMLElement {
    const wrap = document.createElement("label");
    wrap.className = `slider-wrap ${name}-wrap`;
    wrap.textContent = `${title} `;
    const input = document.createElement("input");
    input.type = "range";
    input.className = name;
    input.min = String(min);
    input.max = String(max);
    input.step = String(step);
    input.value = String(value);
    const valueLabel = document.createElement("output");
    valueLabel.className = `${name}-value`;
    valueLabel.textContent = String(value);
    input.addEventListener("input", () => {
      apply(Number(input.value));
      this.controlsChanged();
    });
    wrap.append(input, valueLabel);
    return wrap;
  }

  private syncControlWidgets(): void {
    const lengthValue = this.root.querySelector<HTMLElement>(".length-value");
    if (lengthValue) lengthValue.textContent = String(this.state.lengthWords);
    const fpValue = this.root.querySelector<HTMLElement>(".female-ratio-value");
    if (fpValue) fpValue.textContent = this.state.femaleRatio.toFixed(2);
    const allBox = this.root.querySelector<HTMLInputElement>(".aspect-all-box");
    if (allBox) allBox.checked = this.state.allAspects;
    for (const box of this.root.querySelectorAll<HTMLInputElement>(".aspect-box")) {
      const label = box.dataset.aspect ?? "";
      box.checked = this.state.allAspects || this.state.selectedAspects.has(label);
    }
  }
}

function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}
