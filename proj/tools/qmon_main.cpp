#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmon/catalog.hpp"
#include "qmon/errors.hpp"
#include "qmon/homology.hpp"
#include "qmon/monodromy.hpp"
#include "qmon/quandle_json.hpp"
#include "qmon/torus_dehn.hpp"

using nlohmann::json;

namespace {

// a carrier argument is either a json table file or a catalog spec
qmon::CatalogEntry load_carrier(const std::string& s) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(s, ec)) {
    qmon::CatalogEntry e;
    e.name = s;
    e.quandle = qmon::quandle_from_file(s);
    return e;
  }
  return qmon::catalog_build(s);
}

const qmon::FiniteQuandle& table_of(const qmon::CatalogEntry& e) {
  if (!e.quandle.has_value())
    throw qmon::StructuralError(e.name + " has no finite table");
  return *e.quandle;
}

std::string witness_str(const qmon::FiniteQuandle& q, const qmon::LawViolation& v) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int w : v.witness) {
    if (w < 0) break;
    if (!first) os << ", ";
    os << q.label(w);
    first = false;
  }
  os << ")";
  return os.str();
}

std::vector<int> parse_index_tuple(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) { out.push_back(std::stoi(cur)); cur.clear(); }
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  if (out.empty()) throw qmon::StructuralError("empty tuple");
  return out;
}

int run_axioms_sampled(bool json_out, unsigned seed) {
  // The curve carrier is infinite, so the laws are checked on a bounded
  // window plus random triples.  The seed is echoed for reproducibility.
  auto mid = qmon::slopes_up_to_height(3, true);
  auto small = qmon::slopes_up_to_height(2, true);
  auto big = qmon::slopes_up_to_height(6, false);

  bool ok = true;
  std::string what, witness;
  auto fail = [&](const std::string& w, const std::string& at) {
    if (ok) { what = w; witness = at; }
    ok = false;
  };

  for (const auto& p : mid)
    if (qmon::slope_rhd(p, p) != p) fail("idempotence", p.str());

  for (const auto& p : mid)
    for (const auto& q : mid) {
      if (qmon::slope_unrhd(qmon::slope_rhd(p, q), q) != p ||
          qmon::slope_rhd(qmon::slope_unrhd(p, q), q) != p)
        fail("right inverse", p.str() + ", " + q.str());
      qmon::SL2 mq = qmon::twist_matrix(q);
      qmon::SL2 conj = qmon::sl2_mul(qmon::sl2_mul(qmon::sl2_inv(mq), qmon::twist_matrix(p)), mq);
      if (qmon::twist_matrix(qmon::slope_rhd(p, q)) != conj)
        fail("twist conjugation", p.str() + ", " + q.str());
    }

  long long triples = 0;
  auto selfdist = [&](const qmon::Slope& p, const qmon::Slope& q, const qmon::Slope& r) {
    ++triples;
    if (qmon::slope_rhd(qmon::slope_rhd(p, q), r) !=
        qmon::slope_rhd(qmon::slope_rhd(p, r), qmon::slope_rhd(q, r)))
      fail("self distributivity", p.str() + ", " + q.str() + ", " + r.str());
  };
  for (const auto& p : small)
    for (const auto& q : small)
      for (const auto& r : small) selfdist(p, q, r);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, big.size() - 1);
  for (int i = 0; i < 500; ++i) selfdist(big[pick(rng)], big[pick(rng)], big[pick(rng)]);

  if (json_out) {
    json j;
    j["format"] = 1;
    j["carrier"] = "torus-dehn";
    j["sampled"] = true;
    j["seed"] = seed;
    j["slopes"] = mid.size();
    j["triples"] = triples;
    j["passed"] = ok;
    if (!ok) j["violation"] = {{"law", what}, {"witness", witness}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "torus-dehn: infinite carrier, sampled check (seed " << seed << ", "
              << mid.size() << " slopes, " << triples << " triples)\n";
    if (!ok) std::cout << "violation: " << what << " at " << witness << "\n";
    std::cout << "axioms: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int run_axioms(const std::string& carrier, bool json_out, unsigned seed) {
  auto e = load_carrier(carrier);
  if (e.torus_dehn) return run_axioms_sampled(json_out, seed);
  const auto& q = table_of(e);
  auto rep = qmon::check_axioms(q);
  if (json_out) {
    json j;
    j["format"] = 1;
    j["carrier"] = e.name;
    j["size"] = q.size();
    j["passed"] = rep.passed;
    j["truncated"] = rep.truncated;
    json vs = json::array();
    for (const auto& v : rep.violations) {
      json w = json::array();
      for (int x : v.witness)
        if (x >= 0) w.push_back(x);
      vs.push_back({{"law", qmon::law_name(v.law)}, {"witness", w}});
    }
    j["violations"] = vs;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << e.name << ": " << q.size() << " elements\n";
    for (const auto& v : rep.violations)
      std::cout << "violation: " << qmon::law_name(v.law) << " at " << witness_str(q, v) << "\n";
    if (rep.truncated) std::cout << "(more violations not shown)\n";
    std::cout << "axioms: " << (rep.passed ? "PASS" : "FAIL") << "\n";
  }
  return rep.passed ? 0 : 1;
}

int run_homs(const std::string& src, const std::string& tgt, bool list, bool json_out) {
  auto es = load_carrier(src), et = load_carrier(tgt);
  const auto& qs = table_of(es);
  const auto& qt = table_of(et);
  auto homs = qmon::enumerate_homs(qs, qt);
  if (json_out) {
    json j;
    j["format"] = 1;
    j["count"] = homs.size();
    if (list) {
      json hs = json::array();
      for (const auto& h : homs) hs.push_back(h);
      j["homs"] = hs;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "homs: " << homs.size() << "\n";
    if (list)
      for (const auto& h : homs) {
        std::cout << "[";
        for (size_t i = 0; i < h.size(); ++i) std::cout << (i ? " " : "") << h[i];
        std::cout << "]\n";
      }
  }
  return 0;
}

int run_generate(const std::string& spec, const std::string& out) {
  auto e = load_carrier(spec);
  const auto& q = table_of(e);
  std::string text = qmon::quandle_to_json(q);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw qmon::StructuralError("cannot write " + out);
    f << text;
  }
  return 0;
}

int run_orbit(const std::string& carrier, const std::string& tuple_text,
              const std::string& file, size_t max_orbit, bool cyclic, bool conj,
              bool members, bool json_out) {
  size_t size = 0;
  bool truncated = false;
  std::vector<std::string> lines;

  if (!file.empty()) {
    auto t = qmon::tuple_from_file(file);
    switch (t.mode) {
      case qmon::MonodromyMode::Cover: {
        if (t.d_or_strands > 6)
          throw qmon::CapacityError("cover orbits supported up to 6 sheets");
        auto carrier_q = qmon::symmetric_group_quandle(t.d_or_strands);
        std::vector<int> idx;
        for (const auto& p : t.cover_entries) idx.push_back(*carrier_q.index_of(p));
        auto orbit = qmon::hurwitz_orbit(carrier_q.quandle, idx,
                                         {max_orbit, cyclic, conj});
        size = orbit.members.size();
        truncated = orbit.truncated;
        if (members)
          for (const auto& m : orbit.members) {
            std::ostringstream os;
            for (size_t i = 0; i < m.size(); ++i)
              os << (i ? " " : "") << carrier_q.elements[m[i]].str();
            lines.push_back(os.str());
          }
        break;
      }
      case qmon::MonodromyMode::Braid: {
        auto orbit = qmon::hurwitz_orbit_braid(t.braid_entries, max_orbit);
        size = orbit.members.size();
        truncated = orbit.truncated;
        if (members)
          for (const auto& m : orbit.members) {
            std::ostringstream os;
            for (size_t i = 0; i < m.size(); ++i)
              os << (i ? " | " : "") << qmon::braid_str(m[i].cord.braid) << " ^" << m[i].label;
            lines.push_back(os.str());
          }
        break;
      }
      case qmon::MonodromyMode::Lefschetz: {
        auto orbit = qmon::hurwitz_orbit_lefschetz(t.lefschetz_entries, max_orbit);
        size = orbit.members.size();
        truncated = orbit.truncated;
        if (members)
          for (const auto& m : orbit.members) {
            std::ostringstream os;
            for (size_t i = 0; i < m.size(); ++i)
              os << (i ? " " : "") << (m[i].sign < 0 ? "-" : "+") << m[i].slope.str();
            lines.push_back(os.str());
          }
        break;
      }
    }
  } else {
    if (carrier.empty() || tuple_text.empty())
      throw qmon::StructuralError("orbit needs --file, or --carrier with --tuple");
    auto e = load_carrier(carrier);
    const auto& q = table_of(e);
    auto start = parse_index_tuple(tuple_text);
    auto orbit = qmon::hurwitz_orbit(q, start, {max_orbit, cyclic, conj});
    size = orbit.members.size();
    truncated = orbit.truncated;
    if (members)
      for (const auto& m : orbit.members) {
        std::ostringstream os;
        for (size_t i = 0; i < m.size(); ++i) os << (i ? " " : "") << q.label(m[i]);
        lines.push_back(os.str());
      }
  }

  if (json_out) {
    json j;
    j["format"] = 1;
    j["size"] = size;
    j["truncated"] = truncated;
    if (members) j["members"] = lines;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "orbit size: " << size << (truncated ? " (truncated)" : "") << "\n";
    for (const auto& l : lines) std::cout << l << "\n";
  }
  return 0;
}

int run_validate(const std::string& file, const qmon::ValidateOptions& opts, bool json_out) {
  auto t = qmon::tuple_from_file(file);
  auto rep = qmon::validate(t, opts);
  if (json_out) {
    json j;
    j["format"] = 1;
    j["mode"] = qmon::mode_name(t.mode);
    j["valid"] = rep.valid;
    json cs = json::array();
    for (const auto& c : rep.checks)
      cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = cs;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks) {
      std::cout << "check: " << c.name << " ... " << (c.passed ? "ok" : "FAIL");
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
    std::cout << (rep.valid ? "valid" : "invalid") << "\n";
  }
  return rep.valid ? 0 : 1;
}

int run_invariant(const std::string& file, const std::string& target,
                  bool connected, bool json_out) {
  auto t = qmon::tuple_from_file(file);
  auto e = load_carrier(target);
  const auto& q = table_of(e);
  const int m = static_cast<int>(t.length());

  long long count = 0;
  std::string closure;
  switch (t.mode) {
    case qmon::MonodromyMode::Cover:
      if (e.perm_carrier.has_value()) {
        count = qmon::count_cover_assignments(*e.perm_carrier, m, t.base, connected);
        closure = t.base == qmon::BaseSpace::Sphere ? "permutation product" : "none";
      } else {
        if (connected)
          throw qmon::StructuralError("--connected needs a permutation-backed target");
        count = qmon::count_inner_assignments(q, m, t.base);
        closure = t.base == qmon::BaseSpace::Sphere ? "inner" : "none";
      }
      break;
    case qmon::MonodromyMode::Braid:
      // labelled cords carry braid-valued monodromy; over a finite target we
      // count unconstrained assignments of the marked loops
      count = qmon::count_inner_assignments(q, m, qmon::BaseSpace::Disk);
      closure = "none";
      break;
    case qmon::MonodromyMode::Lefschetz: {
      std::vector<int> signs;
      for (const auto& s : t.lefschetz_entries) signs.push_back(s.sign);
      count = qmon::count_inner_assignments_signed(q, signs, t.base);
      closure = t.base == qmon::BaseSpace::Sphere ? "inner" : "none";
      break;
    }
  }

  if (json_out) {
    json j;
    j["format"] = 1;
    j["target"] = e.name;
    j["length"] = m;
    j["base"] = qmon::base_name(t.base);
    j["closure"] = closure;
    j["count"] = count;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "colorings of " << m << " marked points by " << e.name << " over the "
              << qmon::base_name(t.base) << " (closure: " << closure << "): " << count << "\n";
  }
  return 0;
}

int run_homology(const std::string& spec, int degree, const std::string& theory,
                 int bound, bool json_out) {
  auto e = load_carrier(spec);
  const auto& q = table_of(e);
  qmon::ChainTheory th;
  if (theory == "rack") th = qmon::ChainTheory::Rack;
  else if (theory == "quandle") th = qmon::ChainTheory::Quandle;
  else throw qmon::StructuralError("theory must be rack or quandle");
  qmon::HomologyOptions opts;
  opts.degree_bound = bound;
  auto h = qmon::homology(q, degree, th, opts);
  if (json_out) {
    json j;
    j["format"] = 1;
    j["carrier"] = e.name;
    j["degree"] = degree;
    j["theory"] = theory;
    j["free_rank"] = h.free_rank;
    json tor = json::array();
    for (const auto& d : h.torsion) tor.push_back(d.str());
    j["torsion"] = tor;
    j["group"] = h.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "H_" << degree << " (" << theory << ") of " << e.name << " = " << h.str()
              << "\n";
  }
  return 0;
}

int run_catalog(const std::string& spec, bool json_out) {
  if (spec.empty()) {
    if (json_out) {
      json j;
      j["format"] = 1;
      j["families"] = qmon::catalog_names();
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& n : qmon::catalog_names()) std::cout << n << "\n";
    }
    return 0;
  }
  auto e = qmon::catalog_build(spec);
  if (json_out) {
    json j;
    j["format"] = 1;
    j["name"] = e.name;
    if (e.quandle.has_value()) {
      j["size"] = e.quandle->size();
      j["orbits"] = qmon::orbit_count(*e.quandle);
    } else {
      j["size"] = "infinite";
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (e.quandle.has_value()) {
      std::cout << e.name << ": " << e.quandle->size() << " elements, "
                << qmon::orbit_count(*e.quandle) << " orbit(s)\n";
      const auto& q = *e.quandle;
      int shown = std::min(q.size(), 8);
      for (int i = 0; i < shown; ++i) std::cout << "  " << i << ": " << q.label(i) << "\n";
      if (q.size() > shown) std::cout << "  ...\n";
    } else {
      std::cout << e.name << ": infinite carrier\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quandles, branched covers, braid monodromy, torus fibrations"};
  app.require_subcommand(1);
  int rc = 0;

  unsigned seed = 12345;
  bool json_out = false;

  // axioms
  std::string ax_carrier;
  auto* ax = app.add_subcommand("axioms", "check the carrier laws");
  ax->add_option("carrier", ax_carrier, "catalog spec or table file")->required();
  ax->add_flag("--json", json_out, "machine-readable output");
  ax->add_option("--seed", seed, "seed for sampled checks on infinite carriers");
  ax->callback([&] { rc = run_axioms(ax_carrier, json_out, seed); });

  // homs
  std::string h_src, h_tgt;
  bool h_list = false;
  auto* hm = app.add_subcommand("homs", "enumerate structure-preserving maps");
  hm->add_option("source", h_src)->required();
  hm->add_option("target", h_tgt)->required();
  hm->add_flag("--list", h_list, "print every map");
  hm->add_flag("--json", json_out);
  hm->callback([&] { rc = run_homs(h_src, h_tgt, h_list, json_out); });

  // generate
  std::string g_spec, g_out;
  auto* gen = app.add_subcommand("generate", "emit a carrier table as json");
  gen->add_option("spec", g_spec)->required();
  gen->add_option("-o,--out", g_out, "output file (default stdout)");
  gen->callback([&] { rc = run_generate(g_spec, g_out); });

  // orbit
  std::string o_carrier, o_tuple, o_file;
  size_t o_max = 10000;
  bool o_cyclic = false, o_conj = false, o_members = false;
  auto* orb = app.add_subcommand("orbit", "explore a tuple's move orbit");
  orb->add_option("--carrier", o_carrier, "catalog spec or table file");
  orb->add_option("--tuple", o_tuple, "comma-separated element indices");
  orb->add_option("--file", o_file, "tuple file (any mode)");
  orb->add_option("--max-orbit", o_max, "orbit size cap");
  orb->add_flag("--cyclic", o_cyclic, "also close under rotation");
  orb->add_flag("--conj", o_conj, "also close under simultaneous translation");
  orb->add_flag("--members", o_members, "print the members");
  orb->add_flag("--json", json_out);
  orb->callback([&] {
    rc = run_orbit(o_carrier, o_tuple, o_file, o_max, o_cyclic, o_conj, o_members, json_out);
  });

  // validate
  std::string v_file;
  qmon::ValidateOptions v_opts;
  auto* val = app.add_subcommand("validate", "validate a tuple file");
  val->add_option("file", v_file)->required();
  val->add_flag("--simple", v_opts.simple, "cover entries must be transpositions");
  val->add_flag("--connected", v_opts.require_connected, "cover entries must act transitively");
  val->add_flag("--projective", v_opts.projective, "closing exponent must be 1");
  val->add_flag("--achiral", v_opts.achiral, "allow negative twists");
  val->add_flag("--json", json_out);
  val->callback([&] { rc = run_validate(v_file, v_opts, json_out); });

  // invariant
  std::string i_file, i_target;
  bool i_connected = false;
  auto* inv = app.add_subcommand("invariant", "count colorings into a finite carrier");
  inv->add_option("file", i_file)->required();
  inv->add_option("target", i_target, "catalog spec or table file")->required();
  inv->add_flag("--connected", i_connected, "count transitive assignments only");
  inv->add_flag("--json", json_out);
  inv->callback([&] { rc = run_invariant(i_file, i_target, i_connected, json_out); });

  // homology
  std::string ho_spec, ho_theory = "quandle";
  int ho_degree = 2, ho_bound = 4;
  auto* ho = app.add_subcommand("homology", "homology of a finite carrier");
  ho->add_option("carrier", ho_spec)->required();
  ho->add_option("degree", ho_degree)->required();
  ho->add_option("--theory", ho_theory, "rack or quandle (default quandle)");
  ho->add_option("--bound", ho_bound, "highest boundary degree to attempt");
  ho->add_flag("--json", json_out);
  ho->callback([&] { rc = run_homology(ho_spec, ho_degree, ho_theory, ho_bound, json_out); });

  // catalog
  std::string c_spec;
  auto* cat = app.add_subcommand("catalog", "list built-in carriers");
  cat->add_option("spec", c_spec, "describe one entry instead");
  cat->add_flag("--json", json_out);
  cat->callback([&] { rc = run_catalog(c_spec, json_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qmon::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const qmon::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
