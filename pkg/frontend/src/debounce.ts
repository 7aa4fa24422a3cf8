/**
 * Trailing-edge debounce: the callback runs once, `ms` after the last call
 * in a burst. Sliders emit dozens of input events per drag; the solver call
 * is the expensive step, so only the settled value should reach it.
 */

export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  cancel(): void;
  /** true while a trailing call is scheduled */
  pending(): boolean;
}

export function debounce<A extends unknown[]>(fn: (...args: A) => void, ms: number): Debounced<A> {
  let timer: ReturnType<typeof setTimeout> | undefined;
  const wrapped = (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = undefined;
      fn(...args);
    }, ms);
  };
  wrapped.cancel = () => {
    if (timer !== undefined) clearTimeout(timer);
    timer = undefined;
  };
  wrapped.pending = () => timer !== undefined;
  return wrapped;
}
