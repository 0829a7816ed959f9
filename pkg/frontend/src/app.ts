/** Single-page wiring: URL -> store -> renderers, with the address bar
 * kept in sync so any view is shareable by copying the link. */

import { ApiClient } from "./api.js";
import { GraphView } from "./graph.js";
import { QuotePanel } from "./quotes.js";
import { decodeViewState, encodeViewState } from "./state.js";
import { ExplorerStore } from "./store.js";
import type { LayerName, TablesResponse } from "./types.js";
import { LAYER_NAMES } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function thresholdSignature(store: ExplorerStore): string {
  const s = store.state;
  return [
    s.groupA ?? "",
    s.groupB ?? "",
    s.minMembersA,
    s.minMembersB,
    s.minTotal ?? "",
    s.specificMin ?? "",
  ].join("/");
}

function renderTables(container: HTMLElement, tables: TablesResponse): void {
  container.textContent = "";
  const concepts = el("table", "focal-concepts");
  const head = el("tr");
  for (const column of ["concept", "unique", "weighted"]) {
    head.appendChild(el("th", undefined, column));
  }
  concepts.appendChild(head);
  for (const row of tables.concepts) {
    const tr = el("tr");
    tr.appendChild(el("td", undefined, row.label));
    tr.appendChild(el("td", "num", String(row.unique_degree)));
    tr.appendChild(el("td", "num", String(row.weighted_degree)));
    concepts.appendChild(tr);
  }
  const assocs = el("table", "focal-associations");
  const ahead = el("tr");
  for (const column of ["association", "count"]) {
    ahead.appendChild(el("th", undefined, column));
  }
  assocs.appendChild(ahead);
  for (const row of tables.associations) {
    const tr = el("tr");
    tr.appendChild(el("td", undefined, `${row.label_a} - ${row.label_b}`));
    tr.appendChild(el("td", "num", String(row.total_count)));
    assocs.appendChild(tr);
  }
  container.appendChild(concepts);
  container.appendChild(assocs);
}

export function mountExplorer(root: HTMLElement, api = new ApiClient()): ExplorerStore {
  const store = new ExplorerStore(
    api,
    decodeViewState(window.location.search.replace(/^\?/, "")),
  );

  root.textContent = "";
  const controls = el("div", "controls");
  const tabs = el("nav", "layer-tabs");
  const mapBox = el("div", "map-box");
  const sidebar = el("aside", "sidebar");
  const tablesBox = el("div", "tables-box");
  const quotesBox = el("div", "quotes-box");
  const errorBox = el("p", "error-banner");
  errorBox.hidden = true;
  sidebar.appendChild(tablesBox);
  sidebar.appendChild(quotesBox);
  root.appendChild(controls);
  root.appendChild(errorBox);
  root.appendChild(tabs);
  root.appendChild(mapBox);
  root.appendChild(sidebar);

  const graph = new GraphView(mapBox, {
    onSelect: (selection) => {
      void store.select(selection);
    },
  });
  const quotes = new QuotePanel(quotesBox, {
    onPage: (direction) => {
      void store.pageQuotes(direction);
    },
  });

  const minTotalInput = el("input") as HTMLInputElement;
  minTotalInput.type = "range";
  minTotalInput.min = "1";
  minTotalInput.max = "10";
  minTotalInput.addEventListener("change", () => {
    void store.setMinTotal(Number(minTotalInput.value));
  });
  const minTotalLabel = el("label", undefined, "min total ");
  minTotalLabel.appendChild(minTotalInput);
  const minTotalValue = el("output");
  minTotalLabel.appendChild(minTotalValue);
  controls.appendChild(minTotalLabel);

  const syncUrl = () => {
    const query = encodeViewState(store.state);
    const url = query ? `?${query}` : window.location.pathname;
    window.history.replaceState(null, "", url);
  };

  const redraw = () => {
    syncUrl();
    const { layers, tables, quotes: quoteData, error } = store.data;
    errorBox.hidden = !error;
    if (error) {
      errorBox.textContent = `${error.code}: ${error.message}`;
    }

    tabs.textContent = "";
    for (const name of LAYER_NAMES) {
      const count = layers?.layers[name]?.edges ?? 0;
      const button = el("button", "layer-tab", `${name} (${count})`);
      button.dataset.layer = name;
      if (name === store.state.layer) {
        button.classList.add("active");
      }
      button.addEventListener("click", () => {
        void store.setLayer(name as LayerName);
      });
      tabs.appendChild(button);
    }

    const effectiveMinTotal =
      store.state.minTotal ?? layers?.params.min_total ?? 1;
    minTotalInput.value = String(effectiveMinTotal);
    minTotalValue.textContent = ` ${effectiveMinTotal}`;

    graph.render(
      store.layerEdges(),
      thresholdSignature(store),
      store.state.selection,
    );
    if (tables) {
      renderTables(tablesBox, tables);
    }
    if (store.state.selection && quoteData) {
      quotes.render(store.state.selection, quoteData);
    } else {
      quotes.renderEmpty();
    }
  };

  store.subscribe(redraw);
  window.addEventListener("popstate", () => {
    store.state = decodeViewState(window.location.search.replace(/^\?/, ""));
    void store.start();
  });
  void store.start();
  return store;
}

if (typeof document !== "undefined" && document.getElementById("explorer")) {
  mountExplorer(document.getElementById("explorer")!);
}
