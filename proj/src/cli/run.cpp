#include "rees/cli/run.hpp"

#include <sstream>

#include "json.hpp"
#include "rees/analysis/betti.hpp"
#include "rees/analysis/cm_report.hpp"
#include "rees/analysis/verify.hpp"
#include "rees/bigrading.hpp"
#include "rees/downgrade.hpp"
#include "rees/errors.hpp"
#include "rees/oracle/ideal.hpp"
#include "rees/poly_io.hpp"

namespace rees {

namespace {

using Json = nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResourceLimit: return 3;
    case ErrorKind::InternalInvariantViolation: return 2;
    default: return 1;
  }
}

template <class K>
std::string bidegree_text(const Polynomial<K>& p) {
  BidegreeResult b = bidegree_of(p);
  if (const auto* bd = std::get_if<Bidegree>(&b)) return bd->to_string();
  return "(?)";
}

template <class K>
class Runner {
 public:
  Runner(const DeJonquieresMap<K>& map, const Command& cmd, const Budget& budget)
      : map_(map), cmd_(cmd), budget_(budget) {}

  RunResult dispatch() {
    const std::string& v = cmd_.verb;
    if (v == "sequence") return sequence();
    if (v == "rees") return rees();
    if (v == "implicitize") return implicitize();
    if (v == "betti") return betti();
    if (v == "report") return report();
    if (v == "verify") return verify();
    if (v == "oracle") return oracle();
    throw Error(ErrorKind::InvalidArgument, "unknown verb '" + v + "'");
  }

 private:
  RunResult ok(std::string out) const { return {0, std::move(out), {}}; }

  RunResult sequence() {
    auto seq = downgraded_sequence(map_);
    std::ostringstream out;
    Json doc = Json::array();
    for (int i = 1; i <= seq.length(); ++i) {
      const auto& h = seq.h(i);
      out << "h" << i << " " << bidegree_text(h) << ": " << format_poly(h) << "\n";
      doc.push_back({{"name", "h" + std::to_string(i)}, {"bidegree", bidegree_text(h)}, {"poly", format_poly(h)}});
    }
    return ok(cmd_.json ? Json{{"sequence", doc}}.dump(2) + "\n" : out.str());
  }

  RunResult rees() {
    auto seq = downgraded_sequence(map_);
    GeneratorSet<K> minors = minors_generators(map_.ring_ptr());
    std::ostringstream out;
    Json doc = Json::array();
    auto emit = [&](const std::string& label, const Polynomial<K>& p) {
      out << label << " " << bidegree_text(p) << ": " << format_poly(p) << "\n";
      doc.push_back({{"name", label}, {"bidegree", bidegree_text(p)}, {"poly", format_poly(p)}});
    };
    for (std::size_t k = 0; k < minors.gens.size(); ++k) emit("m" + std::to_string(k + 1), minors.gens[k]);
    for (int i = 1; i <= seq.length(); ++i) emit("h" + std::to_string(i), seq.h(i));
    return ok(cmd_.json ? Json{{"generators", doc}}.dump(2) + "\n" : out.str());
  }

  RunResult implicitize() {
    auto eq = implicit_equation(map_);
    if (cmd_.json) {
      Json doc;
      if (eq) {
        doc["implicit_equation"] = format_poly(*eq);
      } else {
        doc["implicit_equation"] = nullptr;
        doc["dominant"] = true;
      }
      return ok(doc.dump(2) + "\n");
    }
    return ok((eq ? format_poly(*eq) : std::string("dominant")) + "\n");
  }

  RunResult betti() {
    if (map_.mode() != Mode::Standard) {
      throw Error(ErrorKind::InvalidArgument, "the Betti table is only known for standard maps");
    }
    BettiTable t = betti_table(map_.n(), map_.d());
    if (!cmd_.json) return ok(t.to_text());
    Json mods = Json::array();
    for (const auto& m : t.modules) {
      Json summands = Json::array();
      for (const auto& s : m.summands) summands.push_back({{"multiplicity", s.multiplicity}, {"shift", {-s.a, -s.b}}});
      mods.push_back({{"index", m.index}, {"rank", m.rank()}, {"summands", summands}});
    }
    return ok(Json{{"n", t.n}, {"d", t.d}, {"modules", mods}}.dump(2) + "\n");
  }

  RunResult report() {
    CMReport r = cm_report(map_.mode(), map_.n(), map_.d());
    if (!cmd_.json) return ok(r.to_text());
    Json doc = {{"mode", to_string(r.mode)}, {"n", r.n},         {"d", r.d},
                {"dim", r.dim_rees},         {"depth", r.depth_rees}, {"cm", r.is_cm},
                {"almost_cm", r.is_almost_cm}, {"source", "closed formula"}};
    return ok(doc.dump(2) + "\n");
  }

  RunResult verify() {
    VerifyOptions opt;
    opt.seed = cmd_.seed;
    opt.budget = budget_;
    opt.corrupt = cmd_.corrupt;
    opt.timing = cmd_.timing;
    VerifyReport r = verify_suite(map_, opt);
    RunResult result = ok(cmd_.json ? r.to_json() : r.to_text());
    if (r.any_failed()) {
      result.exit_code = 2;
    } else if (r.any_resource_limit()) {
      result.exit_code = 3;
    }
    return result;
  }

  IdealHandle<K> named_set(const std::string& name) {
    const RingPtr<K>& ring = map_.ring_ptr();
    if (name == "minors") return IdealHandle<K>(minors_generators(ring));
    if (name == "L") return IdealHandle<K>(symmetric_ideal(map_));
    if (name == "J") return IdealHandle<K>(rees_ideal(map_));
    if (name == "K") return IdealHandle<K>(k_ideal(ring));
    if (name == "m") return IdealHandle<K>(maximal_ideal(ring));
    if (name.size() > 1 && name[0] == 'J') {
      int i = 0;
      try {
        std::size_t used = 0;
        i = std::stoi(name.substr(1), &used);
        if (used != name.size() - 1) i = 0;
      } catch (const std::exception&) {
        i = 0;
      }
      if (i >= 1) return IdealHandle<K>(j_ideal(downgraded_sequence(map_), i));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown generator set '" + name + "' (minors, L, J, K, m, J<i>)");
  }

  RunResult gens_out(const std::vector<Polynomial<K>>& gens, Json extra = Json::object()) {
    if (cmd_.json) {
      Json list = Json::array();
      for (const auto& p : gens) list.push_back(format_poly(p));
      extra["generators"] = list;
      return ok(extra.dump(2) + "\n");
    }
    std::ostringstream out;
    for (auto it = extra.begin(); it != extra.end(); ++it) out << it.key() << "=" << it.value().dump() << "\n";
    for (const auto& p : gens) out << format_poly(p) << "\n";
    return ok(out.str());
  }

  RunResult oracle() {
    IdealHandle<K> a = named_set(cmd_.oracle_set);
    const std::string& op = cmd_.oracle_op;
    if (op == "gb") return gens_out(a.grevlex_basis(budget_).polynomials());
    if (op == "dim") {
      int dim = krull_dimension(a, budget_);
      return cmd_.json ? ok(Json{{"dim", dim}}.dump(2) + "\n") : ok("dim=" + std::to_string(dim) + "\n");
    }
    if (op == "eliminate") return gens_out(eliminate_x(a, budget_).grevlex_basis(budget_).polynomials());
    if (op == "saturate") {
      auto sat = saturate(a, named_set(cmd_.oracle_by), budget_);
      return gens_out(sat.ideal.grevlex_basis(budget_).polynomials(), Json{{"steps", sat.steps}});
    }
    if (op == "colon") {
      return gens_out(colon_ideal(a, named_set(cmd_.oracle_by), budget_).grevlex_basis(budget_).polynomials());
    }
    throw Error(ErrorKind::InvalidArgument, "unknown oracle operation '" + op + "' (gb, saturate, eliminate, dim, colon)");
  }

  const DeJonquieresMap<K>& map_;
  const Command& cmd_;
  Budget budget_;
};

}  // namespace

RunResult run(const Command& cmd) {
  try {
    Budget budget;
    if (cmd.budget_pairs) budget.max_pairs = *cmd.budget_pairs;
    InstanceFile file = read_instance_file(cmd.instance_path);
    if (cmd.field) file.field = parse_field(*cmd.field);
    AnyMap map = load_instance(file, budget);
    return std::visit([&](const auto& m) { return Runner(m, cmd, budget).dispatch(); }, map);
  } catch (const Error& e) {
    return {exit_code_for(e.kind()), {}, "error: " + std::string(to_string(e.kind())) + ": " + e.what() + "\n"};
  }
}

}  // namespace rees
