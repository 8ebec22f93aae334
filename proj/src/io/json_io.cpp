#include "cobeh/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cobeh/core/error.hpp"

namespace cobeh {

using Json = nlohmann::ordered_json;

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw MalformedInput(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::string text(const Json& v, const char* what) {
  if (!v.is_string()) throw MalformedInput(std::string(what) + " must be a string");
  return v.get<std::string>();
}

Carrier labels(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_array()) throw MalformedInput(std::string("'") + key + "' must be an array of labels");
  std::vector<std::string> names;
  for (const auto& item : v) names.push_back(text(item, key));
  return Carrier(std::move(names));
}

Json labels_json(const Carrier& c) { return Json(c.names()); }

Rational weight(const Json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw MalformedInput("weights must be \"p/q\" strings or integers");
}

std::vector<Transition> edges(const Json& doc, const Carrier& states, const Carrier& alphabet) {
  std::vector<Transition> out;
  const Json& list = field(doc, "transitions");
  if (!list.is_array()) throw MalformedInput("'transitions' must be an array");
  for (const auto& t : list) {
    out.push_back({states.at(text(field(t, "from"), "from")),
                   alphabet.at(text(field(t, "action"), "action")),
                   states.at(text(field(t, "to"), "to"))});
  }
  return out;
}

Json edges_json(const std::vector<Transition>& ts, const Carrier& states, const Carrier& alphabet) {
  Json out = Json::array();
  for (const auto& t : ts) {
    out.push_back({{"from", states.name(t.from)}, {"action", alphabet.name(t.action)}, {"to", states.name(t.to)}});
  }
  return out;
}

Nda load_nda(const Json& doc) {
  Nda n;
  n.states = labels(doc, "states");
  n.alphabet = labels(doc, "alphabet");
  n.transitions = edges(doc, n.states, n.alphabet);
  if (doc.contains("accepting")) {
    for (const auto& x : doc.at("accepting")) n.accepting.push_back(n.states.at(text(x, "accepting")));
  }
  return n;
}

Lwa load_lwa(const Json& doc) {
  Lwa l;
  l.states = labels(doc, "states");
  l.alphabet = labels(doc, "alphabet");
  const std::size_t n = l.states.size();
  l.output = zero_vector(n);
  if (doc.contains("output")) {
    const Json& out = doc.at("output");
    if (!out.is_object()) throw MalformedInput("'output' must map state labels to weights");
    for (const auto& [label, w] : out.items()) l.output[l.states.at(label)] = weight(w);
  }
  const Json& mats = field(doc, "matrices");
  if (!mats.is_object()) throw MalformedInput("'matrices' must map actions to matrices");
  l.matrices.assign(l.alphabet.size(), QMatrix(n, zero_vector(n)));
  for (const auto& [action, rows] : mats.items()) {
    const std::size_t a = l.alphabet.at(action);
    if (!rows.is_array() || rows.size() != n) {
      throw MalformedInput("matrix for action " + action + " must have " + std::to_string(n) + " rows");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n) {
        throw MalformedInput("matrix for action " + action + " row " + l.states.name(i) + " must have " +
                             std::to_string(n) + " entries");
      }
      for (std::size_t j = 0; j < n; ++j) l.matrices[a][i][j] = weight(rows[i][j]);
    }
  }
  return l;
}

Cts load_cts(const Json& doc) {
  Cts c;
  c.conditions = labels(doc, "conditions");
  c.states = labels(doc, "states");
  const Json& list = field(doc, "transitions");
  if (!list.is_array()) throw MalformedInput("'transitions' must be an array");
  for (const auto& t : list) {
    c.transitions.push_back({c.conditions.at(text(field(t, "cond"), "cond")),
                             c.states.at(text(field(t, "from"), "from")),
                             c.states.at(text(field(t, "to"), "to"))});
  }
  return c;
}

Semilattice load_lattice(const Json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "boolean") return Semilattice::boolean();
    throw MalformedInput("unknown lattice '" + v.get<std::string>() + "'");
  }
  if (v.is_object() && v.contains("powerset")) return Semilattice::powerset(labels(v, "powerset"));
  const Carrier elements = labels(v, "elements");
  const Json& rows = field(v, "join");
  std::vector<std::vector<std::size_t>> join;
  if (!rows.is_array()) throw MalformedInput("'join' must be a table of element labels");
  for (const auto& row : rows) {
    if (!row.is_array()) throw MalformedInput("'join' rows must be arrays");
    std::vector<std::size_t> r;
    for (const auto& e : row) r.push_back(elements.at(text(e, "join entry")));
    join.push_back(std::move(r));
  }
  return Semilattice::table(elements, std::move(join), elements.at(text(field(v, "bottom"), "bottom")));
}

Json lattice_json(const Semilattice& s) {
  if (s == Semilattice::boolean()) return "boolean";
  if (s.kind() == Semilattice::Kind::powerset) return Json{{"powerset", labels_json(s.labels())}};
  Json join = Json::array();
  for (const auto& row : s.join_table()) {
    Json r = Json::array();
    for (auto e : row) r.push_back(s.labels().name(e));
    join.push_back(std::move(r));
  }
  return Json{{"elements", labels_json(s.labels())}, {"join", join}, {"bottom", s.labels().name(s.bottom())}};
}

LatticeElem load_output(const Semilattice& s, const Json& v) {
  if (s.kind() == Semilattice::Kind::powerset) {
    if (!v.is_array()) throw MalformedInput("outputs in a powerset lattice are arrays of atoms");
    LatticeElem e = 0;
    for (const auto& atom : v) e |= singleton(s.labels().at(text(atom, "atom")));
    return e;
  }
  return s.parse(text(v, "output"));
}

Json output_json(const Semilattice& s, LatticeElem e) {
  if (s.kind() == Semilattice::Kind::powerset) {
    Json out = Json::array();
    for (auto i : members(e)) out.push_back(s.labels().name(i));
    return out;
  }
  return s.format(e);
}

MooreSystem load_moore(const Json& doc) {
  Lts l;
  l.states = labels(doc, "states");
  l.alphabet = labels(doc, "alphabet");
  l.transitions = edges(doc, l.states, l.alphabet);
  if (doc.contains("semantics")) {
    const MooreSemantics s = parse_semantics(text(doc.at("semantics"), "semantics"));
    return {with_semantics(l, s), s};
  }
  MooreSystem m{{l, load_lattice(field(doc, "lattice")), {}}, std::nullopt};
  const Json& outs = field(doc, "outputs");
  if (!outs.is_object()) throw MalformedInput("'outputs' must map state labels to lattice values");
  m.machine.outputs.assign(l.states.size(), m.machine.lattice.bottom());
  std::vector<bool> given(l.states.size(), false);
  for (const auto& [label, v] : outs.items()) {
    const std::size_t x = l.states.at(label);
    m.machine.outputs[x] = load_output(m.machine.lattice, v);
    given[x] = true;
  }
  for (std::size_t x = 0; x < given.size(); ++x) {
    if (!given[x]) throw MalformedInput("no output given for state " + l.states.name(x));
  }
  return m;
}

template <class T>
void require(const T& system, const char* what) {
  require_valid(validate(system), what);
}

}  // namespace

Family family_of(const SystemFile& s) {
  switch (s.index()) {
    case 0: return Family::nda;
    case 1: return Family::lwa;
    case 2: return Family::cts;
    default: return Family::moore;
  }
}

SystemFile load_system(const Json& doc) {
  try {
    const std::string kind = text(field(doc, "kind"), "kind");
    switch (parse_family(kind)) {
      case Family::nda: {
        Nda n = load_nda(doc);
        require(n, "automaton");
        return n;
      }
      case Family::lwa: {
        Lwa l = load_lwa(doc);
        require(l, "weighted automaton");
        return l;
      }
      case Family::cts: {
        Cts c = load_cts(doc);
        require(c, "conditional transition system");
        return c;
      }
      case Family::moore: {
        MooreSystem m = load_moore(doc);
        require(m.machine, "Moore system");
        return m;
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("invalid JSON document: ") + e.what());
  }
  throw MalformedInput("unreachable");
}

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
  return load_system(doc);
}

Json to_json(const Nda& n) {
  Json accepting = Json::array();
  for (auto x : n.accepting) accepting.push_back(n.states.name(x));
  return Json{{"kind", "nda"},
              {"states", labels_json(n.states)},
              {"alphabet", labels_json(n.alphabet)},
              {"transitions", edges_json(n.transitions, n.states, n.alphabet)},
              {"accepting", accepting}};
}

Json to_json(const Lwa& l) {
  Json output = Json::object();
  for (std::size_t x = 0; x < l.states.size(); ++x) output[l.states.name(x)] = l.output[x].str();
  Json mats = Json::object();
  for (std::size_t a = 0; a < l.alphabet.size(); ++a) {
    Json rows = Json::array();
    for (const auto& row : l.matrices[a]) {
      Json r = Json::array();
      for (const auto& w : row) r.push_back(w.str());
      rows.push_back(std::move(r));
    }
    mats[l.alphabet.name(a)] = std::move(rows);
  }
  return Json{{"kind", "lwa"},
              {"states", labels_json(l.states)},
              {"alphabet", labels_json(l.alphabet)},
              {"output", output},
              {"matrices", mats}};
}

Json to_json(const Cts& c) {
  Json ts = Json::array();
  for (const auto& t : c.transitions) {
    ts.push_back({{"cond", c.conditions.name(t.condition)}, {"from", c.states.name(t.from)}, {"to", c.states.name(t.to)}});
  }
  return Json{{"kind", "cts"},
              {"conditions", labels_json(c.conditions)},
              {"states", labels_json(c.states)},
              {"transitions", ts}};
}

Json to_json(const MooreSystem& m) {
  const Lts& l = m.machine.lts;
  Json doc{{"kind", "moore"},
           {"states", labels_json(l.states)},
           {"alphabet", labels_json(l.alphabet)},
           {"transitions", edges_json(l.transitions, l.states, l.alphabet)}};
  if (m.semantics) {
    doc["semantics"] = to_string(*m.semantics);
    return doc;
  }
  doc["lattice"] = lattice_json(m.machine.lattice);
  Json outs = Json::object();
  for (std::size_t x = 0; x < l.states.size(); ++x) {
    outs[l.states.name(x)] = output_json(m.machine.lattice, m.machine.outputs[x]);
  }
  doc["outputs"] = outs;
  return doc;
}

Json save_system(const SystemFile& s) {
  return std::visit([](const auto& sys) { return to_json(sys); }, s);
}

}  // namespace cobeh
