/**
 * Latest-wins request tracking: starting a new request aborts the previous
 * one, and a ticket lets late responses from servers that ignore the abort
 * be recognized as superseded and dropped.
 */

export class LatestWins {
  private controller: AbortController | undefined;
  private ticket = 0;

  begin(): { signal: AbortSignal; ticket: number } {
    this.controller?.abort();
    this.controller = new AbortController();
    this.ticket += 1;
    return { signal: this.controller.signal, ticket: this.ticket };
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.ticket;
  }

  abort(): void {
    this.controller?.abort();
    this.controller = undefined;
  }
}
