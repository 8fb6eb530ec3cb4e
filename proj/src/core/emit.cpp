#include "parkfrob/emit.hpp"

#include "parkfrob/affine.hpp"
#include "parkfrob/errors.hpp"
#include "parkfrob/serialize.hpp"
#include "parkfrob/stacked.hpp"

namespace parkfrob {

namespace {

struct KindName {
  Kind kind;
  std::string_view name;
};

constexpr KindName kKinds[] = {
    {Kind::path, "path"},         {Kind::pf, "pf"},         {Kind::wpf, "wpf"},
    {Kind::wpf_weak, "wpf-weak"}, {Kind::stacks, "stacks"}, {Kind::stacked_pf, "stacked-pf"},
    {Kind::gamma, "gamma"},
};

// Stops the enumeration early once the sink declines more output.
struct Stop {};

class Writer {
 public:
  Writer(Format fmt, const LineSink& sink) : fmt_(fmt), sink_(sink) {}

  void header(const std::vector<std::string>& cols) {
    if (fmt_ == Format::csv) put(join(cols));
  }

  // Each row is given as a JSON object; CSV takes its values in order.
  void row(const Json& obj) {
    if (fmt_ == Format::json) {
      put(obj.dump());
      return;
    }
    std::vector<std::string> cells;
    for (const auto& [key, v] : obj.items()) {
      if (v.is_array()) {
        std::vector<int> ints;
        for (const auto& x : v) ints.push_back(x.get<int>());
        cells.push_back(join_ints(ints));
      } else if (v.is_string()) {
        cells.push_back(csv_field(v.get<std::string>()));
      } else {
        cells.push_back(v.dump());
      }
    }
    put(join(cells));
  }

 private:
  static std::string join(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += ',';
      s += cells[i];
    }
    return s;
  }
  void put(const std::string& line) {
    if (!sink_(line)) throw Stop{};
  }

  Format fmt_;
  const LineSink& sink_;
};

Json grid_json(const Grid& g) { return Json{{"n", g.n}, {"k", g.k}, {"K", g.K()}}; }

void emit_paths(const Grid& g, Writer& w) {
  w.header({"n", "k", "K", "heights", "area", "pathdinv", "maxtdinv", "codinv"});
  for_each_path(g, [&](const DyckPath& p) {
    const PathStats ps = path_statistics(p);
    Json row = grid_json(g);
    row["heights"] = p.heights();
    row["area"] = ps.area;
    row["pathdinv"] = ps.pathdinv;
    row["maxtdinv"] = ps.maxtdinv;
    row["codinv"] = codinv_pairs(p);
    w.row(row);
  });
}

void emit_pfs(const Grid& g, Writer& w) {
  w.header({"n", "k", "K", "heights", "labels", "area", "pathdinv", "tdinv", "maxtdinv", "dinv"});
  for_each_path(g, [&](const DyckPath& p) {
    const PathStats ps = path_statistics(p);
    const std::vector<int> heights = p.heights();
    for_each_labeling(p, [&](const std::vector<int>& labels) {
      const PfStatistics st = statistics(ps, labels);
      Json row = grid_json(g);
      row["heights"] = heights;
      row["labels"] = labels;
      row["area"] = st.area;
      row["pathdinv"] = st.pathdinv;
      row["tdinv"] = st.tdinv;
      row["maxtdinv"] = st.maxtdinv;
      row["dinv"] = st.dinv;
      w.row(row);
    });
  });
}

void emit_wpfs(const Grid& g, const std::vector<int>& eta, bool weak, Writer& w) {
  w.header({"n", "k", "K", "heights", "labels", "area", "dinv", "dinv_prime"});
  for_each_path(g, [&](const DyckPath& p) {
    const PathStats ps = path_statistics(p);
    const std::vector<int> heights = p.heights();
    for_each_word_labeling(p, eta, weak, [&](const std::vector<int>& labels) {
      Json row = grid_json(g);
      row["heights"] = heights;
      row["labels"] = labels;
      row["area"] = ps.area;
      row["dinv"] = statistics(ps, labels).dinv;
      row["dinv_prime"] = dinv_prime(ps, labels);
      w.row(row);
    });
  });
}

void emit_stacks(const Grid& g, Writer& w) {
  w.header({"n", "k", "stack", "heights"});
  for (const Stack& s : enumerate_stacks(g.n, g.k)) {
    Json row = to_json(s);
    row["heights"] = s.heights();
    w.row(row);
  }
}

void emit_stacked(const Grid& g, Writer& w) {
  w.header({"n", "k", "stack", "path", "labels"});
  for_each_stacked_pf(g.n, g.k, [&](const StackedPF& spf) { w.row(to_json(spf)); });
}

void emit_gamma(const Grid& g, Writer& w) {
  w.header({"n", "k", "K", "window", "inv", "dinv", "A", "B"});
  for_each_gamma_restricted(g, [&](const AffinePermutation& om) {
    const ABSets ab = ab_sets(om, g);
    Json row = grid_json(g);
    row["window"] = om.window();
    row["inv"] = inversions(om.inverse());
    row["dinv"] = statistics(affine_to_pf(om, g)).dinv;
    row["A"] = ab.A.size();
    row["B"] = ab.B.size();
    w.row(row);
  });
}

}  // namespace

std::string_view kind_name(Kind k) {
  for (const auto& kn : kKinds) {
    if (kn.kind == k) return kn.name;
  }
  return "pf";
}

Kind parse_kind(std::string_view name) {
  for (const auto& kn : kKinds) {
    if (kn.name == name) return kn.kind;
  }
  throw input_error("unknown kind '" + std::string(name) +
                    "' (expected path, pf, wpf, wpf-weak, stacks, stacked-pf or gamma)");
}

void emit_enumeration(const Grid& g, Kind kind, const std::vector<int>& eta, Format fmt,
                      const LineSink& sink) {
  const bool word = kind == Kind::wpf || kind == Kind::wpf_weak;
  if (word && eta.empty()) throw input_error("kind " + std::string(kind_name(kind)) + " needs a content eta");
  if (!word && !eta.empty()) throw input_error("eta only applies to the word kinds");
  if (kind != Kind::stacks && kind != Kind::stacked_pf) check_k_cap(g);
  Writer w(fmt, sink);
  try {
    switch (kind) {
      case Kind::path: emit_paths(g, w); break;
      case Kind::pf: emit_pfs(g, w); break;
      case Kind::wpf: emit_wpfs(g, eta, false, w); break;
      case Kind::wpf_weak: emit_wpfs(g, eta, true, w); break;
      case Kind::stacks: emit_stacks(g, w); break;
      case Kind::stacked_pf: emit_stacked(g, w); break;
      case Kind::gamma: emit_gamma(g, w); break;
    }
  } catch (const Stop&) {
  }
}

std::string format_frob(const FrobResult& r, Format fmt) {
  const SymFunc v = change_basis(r.value, Basis::schur);
  if (fmt == Format::json) {
    Json j{{"side", std::string(side_name(r.side))},
           {"n", r.grid.n},
           {"k", r.grid.k},
           {"K", r.grid.K()},
           {"provenance", r.provenance},
           {"value", to_json(v)},
           {"text", v.to_string()}};
    return j.dump() + "\n";
  }
  std::string out = "partition,coeff\n";
  for (const auto& [p, c] : v.terms()) {
    out += csv_field(join_ints(p.parts())) + "," + csv_field(c.to_string()) + "\n";
  }
  return out;
}

std::string format_verdicts(const std::vector<Verdict>& vs, Format fmt) {
  std::string out;
  if (fmt == Format::csv) out = "suite,identity,n,k,K,equal\n";
  for (const Verdict& v : vs) {
    if (fmt == Format::json) {
      out += to_json(v).dump() + "\n";
    } else {
      out += v.suite + "," + csv_field(v.identity) + "," + std::to_string(v.grid.n) + "," +
             std::to_string(v.grid.k) + "," + std::to_string(v.grid.K()) + "," +
             (v.equal ? "true" : "false") + "\n";
    }
  }
  return out;
}

}  // namespace parkfrob
