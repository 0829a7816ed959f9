/** Concordance panel: paginated quote list grouped by member, with
 * member/genre badges and the matched span highlighted inside its
 * sentence context.  The shown total is the API's, never a local count. */

import type { QuoteHit, QuotesResponse } from "./types.js";
import type { Selection } from "./state.js";

/** Split a context string around a byte-addressed span.
 *
 * Hit spans are byte offsets into the source document; the context's own
 * byte range comes along as context_span, so the match is located by byte
 * arithmetic, not by searching the text (which would mis-highlight
 * repeated words). */
export function highlightSlice(
  context: string,
  span: [number, number],
  contextSpan: [number, number],
): { before: string; match: string; after: string } {
  const bytes = new TextEncoder().encode(context);
  const start = Math.max(0, span[0] - contextSpan[0]);
  const end = Math.min(bytes.length, span[1] - contextSpan[0]);
  const decoder = new TextDecoder();
  return {
    before: decoder.decode(bytes.slice(0, start)),
    match: decoder.decode(bytes.slice(start, end)),
    after: decoder.decode(bytes.slice(end)),
  };
}

export function groupByMember(hits: QuoteHit[]): Map<string, QuoteHit[]> {
  const groups = new Map<string, QuoteHit[]>();
  for (const hit of hits) {
    const bucket = groups.get(hit.member_id);
    if (bucket) {
      bucket.push(hit);
    } else {
      groups.set(hit.member_id, [hit]);
    }
  }
  return groups;
}

export function selectionTitle(selection: Selection): string {
  return selection.kind === "concept"
    ? selection.a
    : `${selection.a} - ${selection.b}`;
}

export interface QuotePanelOptions {
  onPage?: (direction: 1 | -1) => void;
}

export class QuotePanel {
  constructor(
    private readonly container: HTMLElement,
    private readonly options: QuotePanelOptions = {},
  ) {}

  renderEmpty(): void {
    this.container.textContent = "";
    const hint = document.createElement("p");
    hint.className = "quotes-empty";
    hint.textContent = "select a concept or association to read its quotes";
    this.container.appendChild(hint);
  }

  render(selection: Selection, response: QuotesResponse): void {
    this.container.textContent = "";

    const header = document.createElement("header");
    header.className = "quotes-header";
    const title = document.createElement("strong");
    title.textContent = selectionTitle(selection);
    const total = document.createElement("span");
    total.className = "quotes-total";
    total.textContent = String(response.total);
    header.appendChild(title);
    header.appendChild(total);
    this.container.appendChild(header);

    for (const [member, hits] of groupByMember(response.hits)) {
      const section = document.createElement("section");
      section.className = "quote-group";
      section.dataset.member = member;
      const heading = document.createElement("h3");
      heading.textContent = member;
      section.appendChild(heading);
      for (const hit of hits) {
        section.appendChild(this.renderHit(hit));
      }
      this.container.appendChild(section);
    }

    if (response.total > response.limit) {
      this.container.appendChild(this.renderPager(response));
    }
  }

  private renderHit(hit: QuoteHit): HTMLElement {
    const block = document.createElement("blockquote");
    block.className = "quote";
    const badges = document.createElement("span");
    badges.className = "quote-badges";
    for (const badge of [hit.member_id, hit.genre, hit.doc_id]) {
      const tag = document.createElement("em");
      tag.className = "badge";
      tag.textContent = badge;
      badges.appendChild(tag);
    }
    const text = document.createElement("p");
    const { before, match, after } = highlightSlice(
      hit.context,
      hit.span,
      hit.context_span,
    );
    text.appendChild(document.createTextNode(before));
    const mark = document.createElement("mark");
    mark.textContent = match;
    text.appendChild(mark);
    text.appendChild(document.createTextNode(after));
    block.appendChild(badges);
    block.appendChild(text);
    return block;
  }

  private renderPager(response: QuotesResponse): HTMLElement {
    const nav = document.createElement("nav");
    nav.className = "quotes-pager";
    const prev = document.createElement("button");
    prev.textContent = "previous";
    prev.disabled = response.offset === 0;
    prev.addEventListener("click", () => this.options.onPage?.(-1));
    const info = document.createElement("span");
    const from = response.offset + 1;
    const to = Math.min(response.offset + response.hits.length, response.total);
    info.textContent = `${from}-${to} of ${response.total}`;
    const next = document.createElement("button");
    next.textContent = "next";
    next.disabled = response.offset + response.hits.length >= response.total;
    next.addEventListener("click", () => this.options.onPage?.(1));
    nav.appendChild(prev);
    nav.appendChild(info);
    nav.appendChild(next);
    return nav;
  }
}
