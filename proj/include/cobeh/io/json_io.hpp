#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "cobeh/equivalence/moore_equiv.hpp"
#include "cobeh/liftings/laws.hpp"
#include "cobeh/systems/systems.hpp"

namespace cobeh {

/// A Moore-style system is stored either by naming a semantics (outputs are
/// derived from the LTS) or with an explicit lattice and outputs.
struct MooreSystem {
  OutputLts machine;
  std::optional<MooreSemantics> semantics;
  friend bool operator==(const MooreSystem&, const MooreSystem&) = default;
};

using SystemFile = std::variant<Nda, Lwa, Cts, MooreSystem>;

Family family_of(const SystemFile& s);

/// Parses and validates a document with a "kind" discriminator. Throws
/// MalformedInput with the validation diagnostics.
SystemFile load_system(const nlohmann::ordered_json& doc);
SystemFile load_system_file(const std::string& path);
nlohmann::ordered_json save_system(const SystemFile& s);

nlohmann::ordered_json to_json(const Nda& n);
nlohmann::ordered_json to_json(const Lwa& l);
nlohmann::ordered_json to_json(const Cts& c);
nlohmann::ordered_json to_json(const MooreSystem& m);

}  // namespace cobeh
