#include "qmon/catalog.hpp"

#include <json.hpp>

#include "qmon/errors.hpp"
#include "qmon/linear.hpp"

namespace qmon {

namespace {

int parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw StructuralError(std::string("bad ") + what + ": " + s);
    return v;
  } catch (const std::logic_error&) {
    throw StructuralError(std::string("bad ") + what + ": " + s);
  }
}

RMat parse_matrix(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception& ex) {
    throw StructuralError(std::string("bad matrix json: ") + ex.what());
  }
  if (!j.is_array() || j.empty()) throw StructuralError("matrix must be a nonempty array");
  RMat m;
  for (const auto& row : j) {
    if (!row.is_array()) throw StructuralError("matrix rows must be arrays");
    RVec r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw StructuralError("matrix entries must be integers");
      r.push_back(BigInt(v.get<long long>()));
    }
    m.push_back(std::move(r));
  }
  size_t w = m[0].size();
  for (const auto& r : m)
    if (r.size() != w) throw StructuralError("ragged matrix");
  if (w != m.size()) throw StructuralError("matrix must be square");
  return m;
}

FiniteQuandle trivial_quandle(int k) {
  if (k < 1) throw StructuralError("trivial carrier needs at least one element");
  std::vector<std::vector<int>> rhd(k, std::vector<int>(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) rhd[x][y] = x;
  return FiniteQuandle::from_rhd(rhd, {});
}

}  // namespace

CatalogEntry catalog_build(const std::string& spec) {
  CatalogEntry e;
  e.name = spec;

  std::string family = spec;
  std::string args;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    family = spec.substr(0, colon);
    args = spec.substr(colon + 1);
  }

  if (family == "trivial") {
    e.quandle = trivial_quandle(parse_int(args, "size"));
    return e;
  }
  if (family == "conj") {
    if (args.size() < 2 || args[0] != 'S')
      throw StructuralError("conj takes S<n>, e.g. conj:S3");
    int n = parse_int(args.substr(1), "symmetric group degree");
    if (n < 1 || n > 6) throw StructuralError("conj:S<n> supports 1 <= n <= 6");
    PermSetQuandle p = symmetric_group_quandle(n);
    e.quandle = p.quandle;
    e.perm_carrier = std::move(p);
    return e;
  }
  if (family == "cyclic") {
    int d = parse_int(args, "degree");
    if (d < 2 || d > 7) throw StructuralError("cyclic:<d> supports 2 <= d <= 7");
    PermSetQuandle p = cyclic_class_quandle(d);
    e.quandle = p.quandle;
    e.perm_carrier = std::move(p);
    return e;
  }
  if (family == "transposition") {
    int d = parse_int(args, "degree");
    if (d < 2 || d > 12) throw StructuralError("transposition:<d> supports 2 <= d <= 12");
    PermSetQuandle p = transposition_quandle(d);
    e.quandle = p.quandle;
    e.perm_carrier = std::move(p);
    return e;
  }
  if (family == "dihedral") {
    int n = parse_int(args, "modulus");
    if (n < 1) throw StructuralError("dihedral modulus must be positive");
    RingSpec ring{n};
    e.quandle = alexander_table(AlexanderQuandle::make(ring, {{BigInt(-1)}}));
    return e;
  }
  if (family == "alexander") {
    auto colon = args.find(':');
    if (colon == std::string::npos)
      throw StructuralError("alexander takes <modulus>:<matrix json>");
    int m = parse_int(args.substr(0, colon), "modulus");
    if (m < 1) throw StructuralError("alexander modulus must be positive");
    RMat t = parse_matrix(args.substr(colon + 1));
    e.quandle = alexander_table(AlexanderQuandle::make(RingSpec{m}, std::move(t)));
    return e;
  }
  if (family == "alternating" || family == "reduced-alternating") {
    auto colon = args.find(':');
    if (colon == std::string::npos)
      throw StructuralError(family + " takes <genus>:<modulus>");
    int g = parse_int(args.substr(0, colon), "genus");
    int m = parse_int(args.substr(colon + 1), "modulus");
    if (g < 1) throw StructuralError("genus must be positive");
    if (m < 1) throw StructuralError("modulus must be positive");
    AlternatingForm f = symplectic_form(g, RingSpec{m});
    e.quandle = family == "alternating" ? alternating_table(f) : reduced_alternating_table(f);
    return e;
  }
  if (family == "genus2-quotient") {
    if (!args.empty()) throw StructuralError("genus2-quotient takes no arguments");
    e.quandle = genus2_quotient().quandle;
    return e;
  }
  if (family == "torus-dehn") {
    if (!args.empty()) throw StructuralError("torus-dehn takes no arguments");
    e.torus_dehn = true;
    return e;
  }
  if (family == "achiral") {
    if (args.empty()) throw StructuralError("achiral takes an inner spec");
    CatalogEntry inner = catalog_build(args);
    if (!inner.quandle.has_value())
      throw StructuralError("achiral needs a finite inner carrier");
    e.quandle = achiral_double(*inner.quandle);
    return e;
  }
  throw StructuralError("unknown carrier family: " + family);
}

std::vector<std::string> catalog_names() {
  return {
      "trivial:<k>",
      "conj:S<n>                    (1 <= n <= 6)",
      "cyclic:<d>                   (2 <= d <= 7)",
      "transposition:<d>            (2 <= d <= 12)",
      "dihedral:<n>",
      "alexander:<m>:<T json>       e.g. alexander:5:[[2]]",
      "alternating:<g>:<m>",
      "reduced-alternating:<g>:<m>",
      "genus2-quotient",
      "torus-dehn                   (infinite; no table)",
      "achiral:<spec>",
  };
}

}  // namespace qmon
