/** Control panel state: place, aspect set, two sliders, last response. */

import type {
  AspectSelection,
  ControlsEcho,
  SummarizeRequest,
  SummaryResponse,
} from "./types.js";

export const LENGTH_MIN = 20;
export const LENGTH_MAX = 300;
export const LENGTH_DEFAULT = 100;
export const FEMALE_RATIO_DEFAULT = 0.5;
export const FEMALE_RATIO_STEP = 0.05;

export class ControlPanelState {
  place = "";
  places: string[] = [];
  aspectLabels: string[] = [];
  allAspects = true;
  selectedAspects = new Set<string>();
  lengthWords = LENGTH_DEFAULT;
  femaleRatio = FEMALE_RATIO_DEFAULT;
  lastResponse: SummaryResponse | null = null;
  inFlight = false;

  initialize(places: string[], aspectLabels: string[]): void {
    this.places = [...places];
    this.aspectLabels = [...aspectLabels];
    this.place = places[0] ?? "";
    this.allAspects = true;
    this.selectedAspects = new Set(aspectLabels);
    this.lengthWords = LENGTH_DEFAULT;
    this.femaleRatio = FEMALE_RATIO_DEFAULT;
  }

  setPlace(place: string): void {
    this.place = place;
  }

  setLength(value: number): void {
    const v = Math.round(value);
    this.lengthWords = Math.min(LENGTH_MAX, Math.max(LENGTH_MIN, v));
  }

  setFemaleRatio(value: number): void {
    const snapped = Math.round(value / FEMALE_RATIO_STEP) * FEMALE_RATIO_STEP;
    const clamped = Math.min(1, Math.max(0, snapped));
    // avoid 0.30000000000000004-style labels
    this.femaleRatio = Number(clamped.toFixed(2));
  }

  setAllAspects(on: boolean): void {
    this.allAspects = on;
    if (on) {
      this.selectedAspects = new Set(this.aspectLabels);
    }
  }

  toggleAspect(label: string, on: boolean): void {
    if (on) {
      this.selectedAspects.add(label);
    } else {
      this.selectedAspects.delete(label);
    }
    this.allAspects = false;
  }

  /** at least one aspect (or the all-toggle) and a place must be chosen */
  get canGenerate(): boolean {
    return this.place !== "" && (this.allAspects || this.selectedAspects.size > 0);
  }

  get aspectSelection(): AspectSelection {
    if (this.allAspects) {
      return "all";
    }
    // catalog order, not insertion order
    return this.aspectLabels.filter((label) => this.selectedAspects.has(label));
  }

  request(): SummarizeRequest {
    return {
      place: this.place,
      aspects: this.aspectSelection,
      length_words: this.lengthWords,
      female_ratio: this.femaleRatio,
    };
  }

  /**
   * Stale-response guard: a summary may only be shown when its echoed
   * controls equal the panel's current values.
   */
  echoMatches(echo: ControlsEcho): boolean {
    if (echo.place !== this.place) return false;
    if (echo.length_words !== this.lengthWords) return false;
    if (Math.abs(echo.female_ratio - this.femaleRatio) > 1e-9) return false;
    const mine = this.aspectSelection;
    if (mine === "all" || echo.aspects === "all") {
      return mine === echo.aspects;
    }
    if (mine.length !== echo.aspects.length) return false;
    return mine.every((label, i) => echo.aspects[i] === label);
  }
}
