#pragma once

#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "io.hpp"

namespace hopfpi::cli {

using io::json;

enum ExitCode : int { ok = 0, clause_failure = 1, input_error = 2 };

/// One stage of a report: its clauses, dimension table and an optional note.
struct Stage {
  std::string name;
  AxiomReport clauses;
  json dimensions = json::object();
  std::string note;

  ClauseStatus status() const {
    if (!clauses.ok()) return ClauseStatus::fail;
    if (clauses.clauses.empty() || clauses.count(ClauseStatus::skipped) == clauses.clauses.size())
      return ClauseStatus::skipped;
    return ClauseStatus::pass;
  }
};

struct Report {
  std::string command;
  std::string field;
  json inputs = json::array();
  std::vector<Stage> sections;

  bool ok() const {
    return std::none_of(sections.begin(), sections.end(),
                        [](const Stage& s) { return s.status() == ClauseStatus::fail; });
  }

  const Stage* find(const std::string& name) const {
    for (const auto& s : sections)
      if (s.name == name) return &s;
    return nullptr;
  }

  json to_json() const {
    json j;
    j["tool"] = "hopfpi";
    j["version"] = version;
    j["command"] = command;
    j["field"] = field;
    j["inputs"] = inputs;
    json secs = json::array();
    for (const auto& s : sections) {
      json sj;
      sj["name"] = s.name;
      sj["status"] = to_string(s.status());
      if (!s.note.empty()) sj["note"] = s.note;
      sj["dimensions"] = s.dimensions;
      json cl = json::array();
      for (const auto& c : s.clauses.clauses) {
        json cj;
        cj["name"] = c.name;
        cj["status"] = to_string(c.status);
        if (!c.witness_index.empty()) cj["witness_index"] = c.witness_index;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        if (!c.note.empty()) cj["note"] = c.note;
        cl.push_back(std::move(cj));
      }
      sj["clauses"] = std::move(cl);
      secs.push_back(std::move(sj));
    }
    j["sections"] = std::move(secs);
    j["status"] = ok() ? "pass" : "fail";
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "hopfpi " << version << "  " << command << "  field " << field << "\n";
    for (const auto& in : inputs) {
      os << "input  " << in.value("role", "") << "  ";
      if (in.contains("name")) os << in["name"].get<std::string>();
      if (in.contains("sha256")) os << in["sha256"].get<std::string>();
      os << "\n";
    }
    for (const auto& s : sections) {
      os << "\n[" << to_string(s.status()) << "] " << s.name << "  (" << s.clauses.count(ClauseStatus::pass) << " pass, "
         << s.clauses.count(ClauseStatus::fail) << " fail, " << s.clauses.count(ClauseStatus::skipped)
         << " skipped)\n";
      if (!s.note.empty()) os << "  note: " << s.note << "\n";
      for (const auto& [k, v] : s.dimensions.items()) os << "  " << k << " = " << v.dump() << "\n";
      for (const auto& c : s.clauses.clauses) {
        os << "  " << to_string(c.status) << std::string(8 - std::string(to_string(c.status)).size(), ' ') << c.name;
        if (!c.note.empty()) os << "  -- " << c.note;
        os << "\n";
        if (!c.witness_index.empty() || !c.witness.empty()) {
          os << "          witness";
          for (auto i : c.witness_index) os << " " << i;
          if (!c.witness.empty()) {
            os << " :";
            for (const auto& w : c.witness) os << " " << w;
          }
          os << "\n";
        }
      }
    }
    os << "\nstatus: " << (ok() ? "pass" : "fail") << "\n";
    return os.str();
  }
};

/// Runs body into a fresh section. Mathematical errors become a failed
/// clause named after the stage; input errors propagate.
inline Stage stage(Report& report, const std::string& name, const std::function<void(Stage&)>& body) {
  Stage s;
  s.name = name;
  try {
    body(s);
  } catch (const NotBijective& e) {
    s.clauses.add(Clause::fail(name, {e.alpha()}, {std::to_string(e.defect())}, e.what()));
  } catch (const ContainmentViolation& e) {
    s.clauses.add(Clause::fail(name, {}, {}, e.what()));
  } catch (const ClosureViolation& e) {
    s.clauses.add(Clause::fail(name, {}, {}, e.what()));
  } catch (const ModuleMapViolation& e) {
    s.clauses.add(Clause::fail(name, {}, {}, e.what()));
  } catch (const PreconditionFailed& e) {
    s.clauses.add(Clause::fail(name, {}, {}, e.what()));
  }
  report.sections.push_back(s);
  return s;
}

inline void skip_stage(Report& report, const std::string& name, const std::string& why) {
  Stage s;
  s.name = name;
  s.note = why;
  s.clauses.add(Clause::skip(name, why));
  report.sections.push_back(std::move(s));
}

template <ExactField K>
json dims_of(const std::vector<Subspace<K>>& spaces) {
  json j = json::array();
  for (const auto& s : spaces) j.push_back(s.dim());
  return j;
}

inline json dims_of(const std::vector<std::size_t>& dims) { return json(dims); }

template <ExactField K>
std::vector<std::size_t> dims_sizes(const std::vector<Subspace<K>>& s) {
  std::vector<std::size_t> out;
  for (const auto& x : s) out.push_back(x.dim());
  return out;
}

template <ExactField K>
void record_iso(Stage& s, const IsoWitness<K>& w, const std::vector<std::size_t>& left,
                const std::vector<std::size_t>& right) {
  json factors = json::array();
  for (std::size_t a = 0; a < w.sizes.size(); ++a) {
    const std::string name = clause_name("two_sided_inverse", {a});
    if (w.sizes[a] == left[a] * right[a])
      s.clauses.add(Clause::pass(name));
    else
      s.clauses.add(Clause::fail(name, {a}, {std::to_string(w.sizes[a])}, "size does not factor"));
    factors.push_back(std::to_string(w.sizes[a]) + "=" + std::to_string(left[a]) + "*" + std::to_string(right[a]));
  }
  s.dimensions["sizes"] = w.sizes;
  s.dimensions["factors"] = std::move(factors);
}

struct Options {
  std::size_t jobs = 1;
};

/// The full chain on a subcoalgebra pair with a section.
template <ExactField K>
void pipeline_subcoalgebra(Report& r, const QuotientPair<K>& p, const Section<K>& sec, const Options& opt) {
  const auto& h = p.ambient;
  const std::size_t n = h.order();
  stage(r, "hopf_axioms", [&](Stage& s) {
    s.clauses = check_hopf_family(h, opt.jobs);
    s.dimensions["H"] = h.dims;
  });
  stage(r, "target_axioms", [&](Stage& s) {
    s.clauses = check_hopf_family(*p.target_hopf(), opt.jobs);
    s.dimensions["C"] = p.C().dims;
  });
  stage(r, "pair_axioms", [&](Stage& s) { s.clauses = check_pi_subcoalgebra(p); });
  stage(r, "L_identities", [&](Stage& s) { s.clauses = check_L_identities(p); });
  std::optional<SubspaceFamily<K>> B;
  stage(r, "homogeneous_space_B", [&](Stage& s) {
    B = compute_B(p);
    s.clauses.add(Clause::pass("closure"));
    s.dimensions["B"] = dims_of(*B);
  });
  std::optional<QuotientPair<K>> cp;
  stage(r, "coisotropic_from_subcoalgebra", [&](Stage& s) {
    cp = subcoalgebra_to_coisotropic(p);
    s.clauses = check_coisotropic(*cp, opt.jobs);
  });
  if (cp)
    stage(r, "homogeneous_space_G", [&](Stage& s) {
      const auto G = compute_G(*cp);
      s.clauses.add(Clause::pass("closure"));
      if (B) {
        for (std::size_t a = 0; a < n; ++a)
          s.clauses.add(G[a] == (*B)[a] ? Clause::pass(clause_name("G_equals_B", {a}))
                                        : Clause::fail(clause_name("G_equals_B", {a}), {a},
                                                       {std::to_string(G[a].dim()), std::to_string((*B)[a].dim())}));
      }
      s.dimensions["G"] = dims_of(G);
    });
  else
    skip_stage(r, "homogeneous_space_G", "no coisotropic pair");
  stage(r, "section", [&](Stage& s) {
    s.clauses = check_section(p, sec);
    const auto solved = solve_convolution_inverse(p, sec.g);
    if (!solved) {
      s.clauses.add(Clause::fail("solved_inverse", {}, {}, "no convolution inverse of g"));
      return;
    }
    for (std::size_t a = 0; a < n; ++a)
      s.clauses.add(compare_maps(clause_name("solved_inverse_matches", {a}), solved->ginv[a], sec.ginv[a]));
  });
  if (B)
    stage(r, "iso_H=C(x)B", [&](Stage& s) { record_iso(s, iso_H_CB(p, sec, *B), p.C().dims, dims_sizes(*B)); });
  else
    skip_stage(r, "iso_H=C(x)B", "B unavailable");
  std::optional<InducedComodule<K>> ind;
  stage(r, "induced_comodule", [&](Stage& s) {
    ind = build_induced(p, regular_comodule(p.C(), Side::right), opt.jobs);
    s.clauses = ind->verification;
    s.dimensions["V"] = ind->source.dims;
    s.dimensions["Ind"] = dims_of(ind->spaces);
  });
  if (ind && B) {
    stage(r, "induced_action", [&](Stage& s) { s.clauses = induced_action(p, *ind, *B).verification; });
    stage(r, "iso_Ind=V(x)B", [&](Stage& s) {
      const auto eta = identity_cosection(h);
      s.clauses = check_cosection(h, eta);
      std::vector<std::size_t> v(n, ind->source.dims[0]);
      record_iso(s, iso_Ind_VB(p, sec, eta, *ind, *B), v, dims_sizes(*B));
    });
  } else {
    skip_stage(r, "induced_action", "needs Ind and B");
    skip_stage(r, "iso_Ind=V(x)B", "needs Ind and B");
  }
  if (cp)
    stage(r, "iso_H=C(x)G", [&](Stage& s) {
      const auto G = compute_G(*cp);
      record_iso(s, iso_H_CG(*cp, sec), p.C().dims, dims_sizes(G));
    });
  else
    skip_stage(r, "iso_H=C(x)G", "no coisotropic pair");
  if (B)
    stage(r, "lemma_suite", [&](Stage& s) { s.clauses = verify_lemma_suite(p, sec, *B); });
  else
    skip_stage(r, "lemma_suite", "B unavailable");
  std::optional<CoinducedComodule<K>> w;
  stage(r, "coinduced_comodule", [&](Stage& s) {
    w = build_coinduced(p, regular_comodule(p.C(), Side::left), opt.jobs);
    s.clauses = w->verification;
    s.dimensions["W"] = dims_of(w->spaces);
  });
  if (w)
    stage(r, "xi_identity", [&](Stage& s) { s.clauses = verify_xi_all(p, *w); });
  else
    skip_stage(r, "xi_identity", "W unavailable");
}

/// The chain on an isolated subHopf family: coisotropic pair, G, section,
/// trivialization, induction and coinduction.
template <ExactField K>
void pipeline_isolated(Report& r, const SubHopfFamily<K>& sub, const Options& opt) {
  const std::size_t n = sub.ambient.order();
  stage(r, "hopf_axioms", [&](Stage& s) {
    s.clauses = check_hopf_family(sub.ambient, opt.jobs);
    s.dimensions["H"] = sub.ambient.dims;
  });
  stage(r, "subhopf", [&](Stage& s) {
    s.clauses = check_subhopf(sub);
    s.dimensions["A"] = dims_of(sub.subspaces);
    if (sub.complement) s.dimensions["I"] = dims_of(*sub.complement);
  });
  std::optional<QuotientPair<K>> cp;
  stage(r, "coisotropic_pair", [&](Stage& s) {
    cp = isolated_to_coisotropic(sub);
    s.clauses = check_coisotropic(*cp, opt.jobs);
    s.dimensions["C"] = cp->C().dims;
  });
  if (!cp) {
    for (const char* name : {"target_axioms", "L_identities", "homogeneous_space_G", "section", "iso_H=C(x)G",
                             "induced_comodule", "coinduced_comodule", "xi_identity", "lemma_suite"})
      skip_stage(r, name, "no coisotropic pair");
    return;
  }
  const auto& p = *cp;
  stage(r, "target_axioms", [&](Stage& s) { s.clauses = check_hopf_family(*p.target_hopf(), opt.jobs); });
  stage(r, "L_identities", [&](Stage& s) { s.clauses = check_L_identities(p); });
  std::optional<SubspaceFamily<K>> G;
  stage(r, "homogeneous_space_G", [&](Stage& s) {
    G = compute_G(p);
    s.clauses.add(Clause::pass("closure"));
    s.dimensions["G"] = dims_of(*G);
  });
  std::optional<Section<K>> sec;
  stage(r, "section", [&](Stage& s) {
    std::vector<Matrix<K>> g;
    for (std::size_t a = 0; a < n; ++a) g.push_back(sub.subspaces[a].embedding());
    sec = solve_convolution_inverse(p, g);
    if (!sec) {
      s.clauses.add(Clause::fail("solved_inverse", {}, {}, "the inclusion has no convolution inverse"));
      return;
    }
    const auto& c = *p.target_hopf();
    for (std::size_t a = 0; a < n; ++a)
      s.clauses.add(compare_maps(clause_name("inverse_is_inclusion_antipode", {a}), sec->ginv[a],
                                 g[a] * c.antipode[sub.ambient.group.inv(a)]));
    s.clauses.append(check_section(p, *sec));
  });
  if (sec && G) {
    stage(r, "iso_H=C(x)G", [&](Stage& s) { record_iso(s, iso_H_CG(p, *sec), p.C().dims, dims_sizes(*G)); });
  } else {
    skip_stage(r, "iso_H=C(x)G", "needs a section and G");
  }
  stage(r, "induced_comodule", [&](Stage& s) {
    const auto ind = build_induced(p, regular_comodule(p.C(), Side::right), opt.jobs);
    s.clauses = ind.verification;
    s.dimensions["Ind"] = dims_of(ind.spaces);
  });
  std::optional<CoinducedComodule<K>> w;
  stage(r, "coinduced_comodule", [&](Stage& s) {
    w = build_coinduced(p, regular_comodule(p.C(), Side::left), opt.jobs);
    s.clauses = w->verification;
    s.dimensions["W"] = dims_of(w->spaces);
  });
  if (w)
    stage(r, "xi_identity", [&](Stage& s) { s.clauses = verify_xi_all(p, *w); });
  else
    skip_stage(r, "xi_identity", "W unavailable");
  if (sec && G)
    stage(r, "lemma_suite", [&](Stage& s) { s.clauses = verify_lemma_suite(p, *sec, *G); });
  else
    skip_stage(r, "lemma_suite", "needs a section and G");
}

/// Pipeline report for a named fixture, or nullopt for an unknown name.
template <ExactField K>
std::optional<Report> pipeline_report(const std::string& fixture, const FieldSpec& field, const Options& opt) {
  Report r;
  r.command = "pipeline";
  r.field = field.str();
  json in;
  in["role"] = "fixture";
  in["name"] = fixture;
  r.inputs.push_back(std::move(in));
  if (fixture == "iso-s3") {
    pipeline_isolated(r, fixtures::iso_s3<K>(field), opt);
    return r;
  }
  std::optional<std::pair<QuotientPair<K>, Section<K>>> pair;
  if (fixture == "qp-s3-a3")
    pair = fixtures::qp_s3_a3<K>(field);
  else if (fixture == "trivial-c2")
    pair = make_self_pair(fixtures::trivial_c2<K>(field));
  else if (fixture == "sw2")
    pair = make_self_pair(fixtures::sw2<K>(field));
  if (!pair) return std::nullopt;
  pipeline_subcoalgebra(r, pair->first, pair->second, opt);
  return r;
}

/// Every name accepted by `fixtures emit`.
inline std::vector<std::string> fixture_names() {
  std::vector<std::string> names = fixtures::hopf_names();
  for (const auto& p : fixtures::pair_names()) names.push_back(p);
  names.push_back("iso-s3");
  names.push_back("iso-s3-bad");
  for (const auto& base : fixtures::hopf_names()) {
    names.push_back("reg-right-" + base);
    names.push_back("reg-left-" + base);
  }
  for (const auto& base : fixtures::pair_names()) {
    names.push_back("reg-right-" + base);
    names.push_back("reg-left-" + base);
  }
  for (const auto& base : fixtures::hopf_names()) names.push_back("cosection-" + base);
  return names;
}

template <ExactField K>
std::optional<json> emit_fixture(const std::string& name, const FieldSpec& field) {
  if (auto h = fixtures::hopf<K>(name, field)) return io::to_json(*h);
  if (auto p = fixtures::pair<K>(name, field)) return io::to_json(p->first, std::optional(p->second));
  if (name == "iso-s3") return io::to_json(fixtures::iso_s3<K>(field));
  if (name == "iso-s3-bad") return io::to_json(fixtures::iso_s3_bad<K>(field));
  for (const auto& [prefix, side] : {std::pair{std::string("reg-right-"), Side::right}, {"reg-left-", Side::left}}) {
    if (name.rfind(prefix, 0) != 0) continue;
    const auto base = name.substr(prefix.size());
    if (auto h = fixtures::hopf<K>(base, field)) return io::to_json(regular_comodule(*h, side), field, h->order());
    if (auto p = fixtures::pair<K>(base, field))
      return io::to_json(regular_comodule(p->first.C(), side), field, p->first.ambient.order());
  }
  if (name.rfind("cosection-", 0) == 0)
    if (auto h = fixtures::hopf<K>(name.substr(10), field)) return io::to_json(identity_cosection(*h), field);
  return std::nullopt;
}

class InputError : public Error {
 public:
  using Error::Error;
};

/// Loaded input files plus the field they agree on.
struct Inputs {
  std::vector<std::pair<std::string, io::Document>> docs;
  FieldSpec field;

  const io::Document* get(const std::string& role) const {
    for (const auto& [r, d] : docs)
      if (r == role) return &d;
    return nullptr;
  }
  json manifest() const {
    json j = json::array();
    for (const auto& [r, d] : docs) {
      json e;
      e["role"] = r;
      e["sha256"] = d.sha256();
      j.push_back(std::move(e));
    }
    return j;
  }
};

inline Inputs load_inputs(const std::vector<std::pair<std::string, std::string>>& paths,
                          const std::optional<FieldSpec>& override_field) {
  Inputs in;
  std::optional<FieldSpec> header;
  for (const auto& [role, path] : paths) {
    if (path.empty()) continue;
    auto doc = io::Document::load(path);
    if (auto f = doc.field()) {
      if (header && !(*header == *f))
        throw InputError("field " + f->str() + " in " + path + " conflicts with " + header->str());
      header = f;
    }
    in.docs.emplace_back(role, std::move(doc));
  }
  if (override_field && header && !(*override_field == *header))
    throw InputError("--field " + override_field->str() + " conflicts with file header " + header->str());
  in.field = override_field ? *override_field : header.value_or(FieldSpec{});
  return in;
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << bytes;
}

template <ExactField K>
Report check_document(const Inputs& in, const Options& opt) {
  const auto& doc = *in.get("input");
  io::Reader<K> rd(doc);
  const auto kind = doc.kind();
  Report r;
  r.command = "check";
  r.field = in.field.str();
  r.inputs = in.manifest();
  const auto ambient = [&]() -> std::optional<HopfFamily<K>> {
    if (const auto* h = in.get("hopf")) return io::Reader<K>(*h).hopf(h->root());
    return std::nullopt;
  };
  if (kind == "group") {
    stage(r, "group_axioms", [&](Stage& s) {
      try {
        const auto g = rd.group(doc.root());
        s.clauses.add(Clause::pass("group"));
        s.dimensions["order"] = g.order();
      } catch (const NotAGroup& e) {
        s.clauses.add(Clause::fail(e.axiom(), {}, {e.witness()}, e.what()));
      }
    });
  } else if (kind == "hopf") {
    const auto h = rd.hopf(doc.root());
    stage(r, "hopf_axioms", [&](Stage& s) {
      s.clauses = check_hopf_family(h, opt.jobs);
      s.dimensions["H"] = h.dims;
    });
  } else if (kind == "coalgebra") {
    const auto c = rd.coalgebra(doc.root());
    stage(r, "coalgebra_axioms", [&](Stage& s) {
      s.clauses = check_coalgebra(c, opt.jobs);
      s.dimensions["C"] = c.dims;
    });
  } else if (kind == "comodule") {
    const auto* over = in.get("over");
    if (!over) throw InputError("checking a comodule needs --over <hopf|coalgebra|pair file>");
    io::Reader<K> ro(*over);
    const auto okind = over->kind();
    CoalgebraFamily<K> c;
    if (okind == "hopf")
      c = ro.hopf(over->root());
    else if (okind == "coalgebra")
      c = ro.coalgebra(over->root());
    else if (okind == "pair")
      c = ro.pair(over->root(), ambient()).C();
    else
      throw InputError("--over must be a hopf, coalgebra or pair file");
    const auto m = rd.comodule(doc.root(), c);
    stage(r, "comodule_axioms", [&](Stage& s) {
      s.clauses = check_comodule(c, m, opt.jobs);
      s.dimensions["M"] = m.dims;
    });
  } else if (kind == "pair") {
    const auto p = rd.pair(doc.root(), ambient());
    const auto sec = rd.embedded_section(doc.root(), p);
    stage(r, "pair_axioms", [&](Stage& s) {
      s.clauses = p.variant == PairVariant::pi_subcoalgebra ? check_pi_subcoalgebra(p) : check_coisotropic(p, opt.jobs);
      s.dimensions["H"] = p.ambient.dims;
      s.dimensions["C"] = p.C().dims;
    });
    stage(r, "L_identities", [&](Stage& s) { s.clauses = check_L_identities(p); });
    if (sec)
      stage(r, "section", [&](Stage& s) { s.clauses = check_section(p, *sec); });
    else
      skip_stage(r, "section", "no section supplied");
  } else if (kind == "subhopf") {
    const auto sub = rd.subhopf(doc.root());
    stage(r, "subhopf", [&](Stage& s) {
      s.clauses = check_subhopf(sub);
      s.dimensions["A"] = dims_of(sub.subspaces);
      if (sub.complement) s.dimensions["I"] = dims_of(*sub.complement);
    });
  } else if (kind == "cosection") {
    const auto h = ambient();
    if (!h) throw InputError("checking a cosection needs --hopf");
    const auto eta = rd.cosection(doc.root(), *h);
    stage(r, "cosection", [&](Stage& s) { s.clauses = check_cosection(*h, eta); });
  } else {
    throw ShapeMismatch("kind: unknown kind \"" + kind + "\"");
  }
  return r;
}

template <ExactField K>
QuotientPair<K> load_pair(const Inputs& in) {
  std::optional<HopfFamily<K>> h;
  if (const auto* hd = in.get("hopf")) h = io::Reader<K>(*hd).hopf(hd->root());
  const auto* pd = in.get("pair");
  if (!pd) throw InputError("--pair is required");
  if (pd->kind() != "pair") throw ShapeMismatch("kind: --pair file must have kind \"pair\"");
  return io::Reader<K>(*pd).pair(pd->root(), h);
}

template <ExactField K>
ComoduleFamily<K> load_comodule(const Inputs& in, const CoalgebraFamily<K>& over) {
  const auto* d = in.get("comodule");
  if (!d) throw InputError("--comodule is required");
  if (d->kind() != "comodule") throw ShapeMismatch("kind: --comodule file must have kind \"comodule\"");
  return io::Reader<K>(*d).comodule(d->root(), over);
}

template <ExactField K>
Report induce_document(const Inputs& in, const Options& opt, const std::string& out_path) {
  const auto p = load_pair<K>(in);
  const auto v = load_comodule<K>(in, p.C());
  std::optional<Section<K>> sec;
  if (const auto* sd = in.get("section"))
    sec = io::Reader<K>(*sd).section(sd->root().contains("section") ? sd->root()["section"] : sd->root(), p);
  else
    sec = io::Reader<K>(*in.get("pair")).embedded_section(in.get("pair")->root(), p);
  std::optional<Cosection<K>> eta;
  if (const auto* cd = in.get("cosection")) eta = io::Reader<K>(*cd).cosection(cd->root(), p.ambient);

  Report r;
  r.command = "induce";
  r.field = in.field.str();
  r.inputs = in.manifest();
  stage(r, "pair_axioms", [&](Stage& s) {
    s.clauses = p.variant == PairVariant::pi_subcoalgebra ? check_pi_subcoalgebra(p) : check_coisotropic(p, opt.jobs);
  });
  stage(r, "comodule_axioms", [&](Stage& s) { s.clauses = check_comodule(p.C(), v, opt.jobs); });
  std::optional<InducedComodule<K>> ind;
  stage(r, "induced_comodule", [&](Stage& s) {
    ind = build_induced(p, v, opt.jobs);
    s.clauses = ind->verification;
    s.dimensions["V"] = v.dims;
    s.dimensions["Ind"] = dims_of(ind->spaces);
  });
  std::optional<SubspaceFamily<K>> space;
  const bool sub = p.variant == PairVariant::pi_subcoalgebra;
  stage(r, sub ? "homogeneous_space_B" : "homogeneous_space_G", [&](Stage& s) {
    space = sub ? compute_B(p) : compute_G(p);
    s.clauses.add(Clause::pass("closure"));
    s.dimensions[sub ? "B" : "G"] = dims_of(*space);
  });
  if (ind && space)
    stage(r, "induced_action", [&](Stage& s) { s.clauses = induced_action(p, *ind, *space).verification; });
  else
    skip_stage(r, "induced_action", "needs Ind and the homogeneous space");
  if (!sec) {
    skip_stage(r, "section", "no section supplied");
    skip_stage(r, "iso", "no section supplied");
  } else {
    stage(r, "section", [&](Stage& s) { s.clauses = check_section(p, *sec); });
    if (space)
      stage(r, sub ? "iso_H=C(x)B" : "iso_H=C(x)G", [&](Stage& s) {
        record_iso(s, sub ? iso_H_CB(p, *sec, *space) : iso_H_CG(p, *sec), p.C().dims, dims_sizes(*space));
      });
    if (!eta || !sub || !ind || !space) {
      skip_stage(r, "iso_Ind=V(x)B", !eta ? "no cosection supplied" : "needs a subcoalgebra pair, Ind and B");
    } else {
      stage(r, "iso_Ind=V(x)B", [&](Stage& s) {
        s.clauses = check_cosection(p.ambient, *eta);
        std::vector<std::size_t> vd(p.ambient.order(), v.dims[0]);
        record_iso(s, iso_Ind_VB(p, *sec, *eta, *ind, *space), vd, dims_sizes(*space));
      });
    }
  }
  if (ind && !out_path.empty())
    write_file(out_path, io::render(io::to_json(*ind, in.field, in.get("pair")->sha256(), p.ambient.order())));
  return r;
}

template <ExactField K>
Report coinduce_document(const Inputs& in, const Options& opt, const std::string& out_path) {
  const auto p = load_pair<K>(in);
  const auto v = load_comodule<K>(in, p.C());
  Report r;
  r.command = "coinduce";
  r.field = in.field.str();
  r.inputs = in.manifest();
  stage(r, "pair_axioms", [&](Stage& s) {
    s.clauses = p.variant == PairVariant::pi_subcoalgebra ? check_pi_subcoalgebra(p) : check_coisotropic(p, opt.jobs);
  });
  stage(r, "comodule_axioms", [&](Stage& s) { s.clauses = check_comodule(p.C(), v, opt.jobs); });
  std::optional<CoinducedComodule<K>> w;
  stage(r, "coinduced_comodule", [&](Stage& s) {
    w = build_coinduced(p, v, opt.jobs);
    s.clauses = w->verification;
    s.dimensions["V"] = v.dims;
    s.dimensions["W"] = dims_of(w->spaces);
  });
  if (w)
    stage(r, "xi_identity", [&](Stage& s) { s.clauses = verify_xi_all(p, *w); });
  else
    skip_stage(r, "xi_identity", "W unavailable");
  if (w && !out_path.empty())
    write_file(out_path, io::render(io::to_json(*w, in.field, in.get("pair")->sha256(), p.ambient.order())));
  return r;
}

inline void print_report(const Report& r, const std::string& format, std::ostream& out) {
  out << (format == "json" ? io::render(r.to_json()) : r.to_text());
}

/// Entry point. args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification and construction for finite-dimensional Hopf group-coalgebras", "hopfpi"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version));
  std::string format = "text";
  std::string field_text;
  std::size_t jobs = 1;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--field", field_text, "Q or Fp:<p>");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  };

  std::string input, over, hopf_path, pair_path, comodule_path, section_path, cosection_path, out_path, fixture;
  auto* check = app.add_subcommand("check", "run the axiom suite of a structure file");
  check->add_option("file", input, "structure file")->required();
  check->add_option("--over", over, "coalgebra for a comodule file");
  check->add_option("--hopf", hopf_path, "ambient Hopf family for pair and cosection files");
  common(check);

  auto* induce = app.add_subcommand("induce", "build the induced comodule");
  auto* coinduce = app.add_subcommand("coinduce", "build the coinduced comodule");
  for (auto* sub : {induce, coinduce}) {
    sub->add_option("--hopf", hopf_path, "ambient Hopf family (optional when the pair embeds it)");
    sub->add_option("--pair", pair_path, "pair file")->required();
    sub->add_option("--comodule", comodule_path, "comodule file")->required();
    sub->add_option("--out", out_path, "output structure file");
    common(sub);
  }
  induce->add_option("--section", section_path, "section file");
  induce->add_option("--cosection", cosection_path, "cosection file");

  auto* pipeline = app.add_subcommand("pipeline", "run the full chain on a named fixture");
  pipeline->add_option("--fixture", fixture, "fixture name")->required();
  common(pipeline);

  auto* fx = app.add_subcommand("fixtures", "list or emit catalog fixtures");
  fx->require_subcommand(1);
  auto* fx_list = fx->add_subcommand("list", "print fixture names");
  auto* fx_emit = fx->add_subcommand("emit", "write a fixture in the structure file format");
  fx_emit->add_option("name", fixture, "fixture name")->required();
  fx_emit->add_option("--out", out_path, "output file (default stdout)");
  fx_emit->add_option("--field", field_text, "Q or Fp:<p>");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::input_error;
  }

  const Options opt{jobs};
  try {
    std::optional<FieldSpec> field_override;
    if (!field_text.empty()) field_override = FieldSpec::parse(field_text);
    const FieldSpec fixture_field = field_override.value_or(FieldSpec{});

    if (fx_list->parsed()) {
      for (const auto& n : fixture_names()) out << n << "\n";
      return ExitCode::ok;
    }
    if (fx_emit->parsed()) {
      const auto j = with_field(fixture_field, [&]<ExactField K>() { return emit_fixture<K>(fixture, fixture_field); });
      if (!j) throw InputError("unknown fixture \"" + fixture + "\"");
      if (out_path.empty())
        out << io::render(*j);
      else
        write_file(out_path, io::render(*j));
      return ExitCode::ok;
    }
    if (pipeline->parsed()) {
      const auto r = with_field(fixture_field,
                                [&]<ExactField K>() { return pipeline_report<K>(fixture, fixture_field, opt); });
      if (!r) throw InputError("unknown pipeline fixture \"" + fixture + "\"");
      print_report(*r, format, out);
      return r->ok() ? ExitCode::ok : ExitCode::clause_failure;
    }
    Report r;
    if (check->parsed()) {
      const auto in = load_inputs({{"input", input}, {"over", over}, {"hopf", hopf_path}}, field_override);
      r = with_field(in.field, [&]<ExactField K>() { return check_document<K>(in, opt); });
    } else if (induce->parsed()) {
      const auto in = load_inputs({{"hopf", hopf_path},
                                   {"pair", pair_path},
                                   {"comodule", comodule_path},
                                   {"section", section_path},
                                   {"cosection", cosection_path}},
                                  field_override);
      r = with_field(in.field, [&]<ExactField K>() { return induce_document<K>(in, opt, out_path); });
    } else {
      const auto in =
          load_inputs({{"hopf", hopf_path}, {"pair", pair_path}, {"comodule", comodule_path}}, field_override);
      r = with_field(in.field, [&]<ExactField K>() { return coinduce_document<K>(in, opt, out_path); });
    }
    print_report(r, format, out);
    return r.ok() ? ExitCode::ok : ExitCode::clause_failure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const ShapeMismatch& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ContainmentViolation& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::clause_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return ExitCode::input_error;
}

}  // namespace hopfpi::cli
