#include "bg/learner.hpp"

#include <cstddef>
#include <map>

#include "bg/doubling.hpp"
#include "bg/eoe.hpp"
#include "bg/exp3ix.hpp"
#include "bg/regexp3.hpp"

namespace bg {

Learner::Learner(Side side, int actions) : side_(side), actions_(actions) {
  if (actions < 1) throw DimensionError("learner: need at least one action");
}

const Policy& Learner::act() {
  if (awaiting_observe_)
    throw ProtocolError("learner: act called twice without observe");
  const Policy& p = do_act();
  awaiting_observe_ = true;
  return p;
}

void Learner::observe(int own_action, double loss) {
  if (!awaiting_observe_)
    throw ProtocolError("learner: observe called before act");
  if (own_action < 0 || own_action >= actions_)
    throw DimensionError("learner: observed action out of range");
  if (!(loss >= 0.0 && loss <= 1.0))
    throw DomainError("learner: loss must lie in [0, 1]");
  do_observe(own_action, loss);
  awaiting_observe_ = false;
  ++rounds_;
}

std::vector<double> importance_estimate(double loss, int own_action,
                                        const Policy& policy, Side side,
                                        long* guard_hits) {
  if (!(loss >= 0.0 && loss <= 1.0))
    throw DomainError("importance_estimate: loss must lie in [0, 1]");
  if (own_action < 0 || own_action >= policy.size())
    throw DimensionError("importance_estimate: action out of range");
  double eff = side == Side::min_player ? loss : 1.0 - loss;
  double denom = policy[own_action];
  if (denom < 1e-300) {
    denom = 1e-300;
    if (guard_hits) ++*guard_hits;
  }
  std::vector<double> est(static_cast<std::size_t>(policy.size()), 0.0);
  est[static_cast<std::size_t>(own_action)] = eff / denom;
  return est;
}

namespace {

struct SpecParts {
  std::string name;
  std::map<std::string, std::string> params;
};

SpecParts parse_spec(const std::string& spec) {
  SpecParts out;
  auto colon = spec.find(':');
  out.name = spec.substr(0, colon);
  if (colon == std::string::npos) return out;
  std::string rest = spec.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
      throw ParseError("learner spec: expected key=value in '" + spec + "'");
    std::string key = item.substr(0, eq);
    if (out.params.count(key))
      throw ParseError("learner spec: duplicate key '" + key + "'");
    out.params[key] = item.substr(eq + 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

double parse_real(const std::string& spec, const std::string& value) {
  std::size_t idx = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &idx);
  } catch (const std::exception&) {
    throw ParseError("learner spec: bad number '" + value + "' in '" + spec + "'");
  }
  if (idx != value.size())
    throw ParseError("learner spec: bad number '" + value + "' in '" + spec + "'");
  return v;
}

long parse_integer(const std::string& spec, const std::string& value) {
  std::size_t idx = 0;
  long v = 0;
  try {
    v = std::stol(value, &idx);
  } catch (const std::exception&) {
    throw ParseError("learner spec: bad integer '" + value + "' in '" + spec + "'");
  }
  if (idx != value.size())
    throw ParseError("learner spec: bad integer '" + value + "' in '" + spec + "'");
  return v;
}

void reject_unknown(const SpecParts& parts, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : parts.params) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok)
      throw ParseError("learner spec: unknown key '" + key + "' for '" + parts.name + "'");
  }
}

}  // namespace

std::unique_ptr<Learner> make_learner(const std::string& spec, Side side,
                                      int own_actions, int opp_actions,
                                      double default_u) {
  if (!(default_u >= 0.0 && default_u < 1.0))
    throw DomainError("learner spec: scheduler offset must lie in [0, 1)");
  SpecParts parts = parse_spec(spec);
  if (parts.name == "uniform") {
    reject_unknown(parts, {});
    return std::make_unique<UniformLearner>(side, own_actions);
  }
  if (parts.name == "exp3ix") {
    reject_unknown(parts, {});
    return std::make_unique<Exp3Ix>(side, own_actions);
  }
  if (parts.name == "eoe") {
    reject_unknown(parts, {"p", "u"});
    if (!parts.params.count("p"))
      throw ParseError("learner spec: eoe requires p=<real>");
    double p = parse_real(spec, parts.params.at("p"));
    double u = parts.params.count("u") ? parse_real(spec, parts.params.at("u"))
                                       : default_u;
    return std::make_unique<Eoe>(std::make_unique<Exp3Ix>(side, own_actions), p, u);
  }
  if (parts.name == "regexp3") {
    reject_unknown(parts, {"T", "tau"});
    if (parts.params.count("T") == parts.params.count("tau"))
      throw ParseError("learner spec: regexp3 requires exactly one of T=<int>, tau=<real>");
    double tau = 0.0;
    if (parts.params.count("T")) {
      long T = parse_integer(spec, parts.params.at("T"));
      tau = regexp3_params(own_actions, opp_actions, T).tau;
    } else {
      tau = parse_real(spec, parts.params.at("tau"));
    }
    return std::make_unique<RegExp3>(side, own_actions, tau);
  }
  if (parts.name == "doubling") {
    reject_unknown(parts, {"u"});
    double u = parts.params.count("u") ? parse_real(spec, parts.params.at("u"))
                                       : default_u;
    return std::make_unique<Doubling>(side, own_actions, opp_actions, u);
  }
  throw ParseError("learner spec: unknown learner '" + parts.name + "'");
}

}  // namespace bg
