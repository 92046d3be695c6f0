// Copyright 2026 The expzero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "frontend/commands.hpp"

#include <chrono>
#include <ctime>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "decomp/decomposition.hpp"
#include "frontend/parser.hpp"
#include "frontend/printer.hpp"
#include "numeric/eval.hpp"
#include "numeric/fieldball.hpp"
#include "zerofinder/zeros.hpp"

namespace expzero::fe {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "expzero/1";

struct Request {
  const std::vector<std::string>& args;
  const CommandOptions& opt;
  Config cfg;
};

struct Outcome {
  std::vector<std::string> normal_forms;
  json result;
  bool assumes_schanuel = false;
  bool complete = false;
  json messages = json::array();
};

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string scientific(const nf::Rational& q) {
  if (sgn(q) == 0) return "0";
  mpf_class v(q, 128);
  mp_exp_t e;
  const std::string d = v.get_str(e, 10, 6);
  const bool neg = d[0] == '-';
  const std::string m = neg ? d.substr(1) : d;
  std::string out = (neg ? "-" : "") + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  return out + "e" + std::to_string(e - 1);
}

json integer_json(const nf::Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json root_json(const nf::AlgebraicRoot& r) {
  const auto& b = r.box;
  return {{"value", print(r)},
          {"minpoly", nf::to_string(r.minpoly)},
          {"box", {b.re_lo.get_str(), b.re_hi.get_str(), b.im_lo.get_str(), b.im_hi.get_str()}},
          {"approx", approx(r)}};
}

json witness_json(const ec::ExpPoly& p, const zf::CollapseWitness& w) {
  if (w.kind == zf::CollapseWitness::Kind::AllCoeffsVanish) return {{"kind", "AllCoeffsVanish"}};
  const auto its = zf::items(p);
  return {{"kind", "ExponentCollision"},
          {"i", w.i},
          {"j", w.j},
          {"exponents", {print(its[w.i].exponent), print(its[w.j].exponent)}}};
}

json decomposition_json(const dc::Decomposition& d) {
  json bricks = json::array(), pstar = json::array();
  for (const auto& b : d.bricks) bricks.push_back(print(b));
  for (const auto& t : d.pstar) {
    json exps = json::array();
    for (const auto& e : t.exps) exps.push_back(e.get_str());
    pstar.push_back({{"coefficient", print(t.coeff)}, {"x_degree", t.xdeg}, {"exponents", exps}});
  }
  return {{"bricks", bricks}, {"L", integer_json(d.L)}, {"x_brick", d.x_brick()}, {"pstar", pstar}};
}

zf::ZeroOptions zero_options(const Request& rq) {
  zf::ZeroOptions o;
  o.cfg = rq.cfg;
  o.numeric_check = rq.opt.numeric_check;
  o.precision_bits = rq.opt.precision_bits;
  return o;
}

void add_diagnostics(Outcome& out, const zf::ZeroReport& rep) {
  for (const auto& d : rep.diagnostics) {
    out.messages.push_back({{"kind", d.kind}, {"candidate", root_json(d.candidate)}, {"detail", d.detail}});
  }
}

nf::FieldElement point_of(const ec::ExpPoly& beta) {
  if (!beta.is_field_constant()) {
    throw Error(ErrorCode::NotConstant, "the point must be an algebraic constant (rational or alg(...))");
  }
  return beta.poly_part().is_zero() ? nf::FieldElement(beta.field()) : beta.poly_part().coeff(0);
}

Outcome one_expr(const Request& rq, const std::function<json(const ec::ExpPoly&)>& f) {
  const ec::ExpPoly p = parse(rq.args[0], rq.cfg);
  Outcome out;
  out.normal_forms = {print(p)};
  out.result = f(p);
  return out;
}

Outcome cmd_normalize(const Request& rq) {
  return one_expr(rq, [](const ec::ExpPoly& p) { return json{{"normal_form", print(p)}}; });
}

Outcome cmd_height(const Request& rq) {
  return one_expr(rq, [](const ec::ExpPoly& p) { return json{{"height", p.height()}}; });
}

Outcome cmd_depth(const Request& rq) {
  return one_expr(rq, [](const ec::ExpPoly& p) { return json{{"depth", ec::depth(p)}}; });
}

Outcome cmd_decompose(const Request& rq) {
  return one_expr(rq, [](const ec::ExpPoly& p) { return decomposition_json(dc::decompose(p)); });
}

Outcome cmd_refine(const Request& rq) {
  return one_expr(rq, [](const ec::ExpPoly& p) { return decomposition_json(dc::refine(dc::decompose(p))); });
}

Outcome cmd_zeros(const Request& rq) {
  const ec::ExpPoly p = parse(rq.args[0], rq.cfg);
  const zf::ZeroReport rep = zf::algebraic_zeros(p, zero_options(rq));
  Outcome out;
  out.normal_forms = {print(p)};
  json zeros = json::array(), roots = json::array();
  for (std::size_t i = 0; i < rep.zeros.size(); ++i) {
    zeros.push_back(print(rep.zeros[i]));
    json r = root_json(rep.zeros[i]);
    r["witness"] = witness_json(p, rep.witnesses[i]);
    roots.push_back(r);
  }
  out.result = {{"zeros", zeros},
                {"roots", roots},
                {"candidates_examined", rep.candidates_examined},
                {"recursion_depth", rep.recursion_depth}};
  out.assumes_schanuel = rep.assumes_schanuel;
  add_diagnostics(out, rep);
  return out;
}

Outcome cmd_common_zeros(const Request& rq) {
  const auto ps = parse_all({rq.args[0], rq.args[1]}, rq.cfg);
  const zf::ZeroReport rep = zf::common_zeros(ps[0], ps[1], zero_options(rq));
  Outcome out;
  out.normal_forms = {print(ps[0]), print(ps[1])};
  json zeros = json::array(), roots = json::array();
  for (std::size_t i = 0; i < rep.zeros.size(); ++i) {
    zeros.push_back(print(rep.zeros[i]));
    json r = root_json(rep.zeros[i]);
    r["witnesses"] = {witness_json(ps[0], rep.witnesses[i]), witness_json(ps[1], rep.second_witnesses[i])};
    roots.push_back(r);
  }
  out.result = {{"zeros", zeros},
                {"roots", roots},
                {"candidates_examined", rep.candidates_examined},
                {"recursion_depth", rep.recursion_depth}};
  out.assumes_schanuel = rep.assumes_schanuel;
  out.complete = rep.complete_for_all_common_zeros;
  add_diagnostics(out, rep);
  return out;
}

Outcome cmd_iszero(const Request& rq) {
  Outcome out;
  out.assumes_schanuel = true;
  if (rq.args.size() == 1) {
    const ec::ExpPoly c = parse(rq.args[0], rq.cfg);
    out.normal_forms = {print(c)};
    out.result = {{"is_zero", zf::const_is_zero(c)}};
    return out;
  }
  const auto ps = parse_all({rq.args[0], rq.args[1]}, rq.cfg);
  const nf::FieldElement beta = point_of(ps[1]);
  out.normal_forms = {print(ps[0]), print(ps[1])};
  const bool zero = zf::is_zero_at(ps[0], beta);
  out.result = {{"is_zero", zero}, {"value", print(ec::eval_at(ps[0], beta))}};
  if (const auto w = zf::collapse_test(ps[0], beta)) {
    out.result["witness"] = witness_json(ps[0], *w);
  } else {
    out.result["witness"] = nullptr;
  }
  if (zero && rq.opt.numeric_check) {
    const numeric::Precision prec{rq.opt.precision_bits};
    const auto ball = numeric::eval_ball(ps[0], numeric::element_ball(beta, prec), prec);
    if (ball.excludes_zero()) throw Error(ErrorCode::InvariantViolation, "ball evaluation excludes 0 at a symbolic zero");
  }
  if (!zero && rq.opt.numeric_check && !numeric::certify_nonzero(ec::eval_at(ps[0], beta), numeric::Precision{rq.opt.precision_bits})) {
    out.messages.push_back({{"kind", "uncertified_rejection"},
                            {"detail", "no enclosure excluding 0 up to " + std::to_string(rq.opt.precision_bits) + " bits"}});
  }
  return out;
}

Outcome cmd_eval(const Request& rq) {
  const auto ps = parse_all({rq.args[0], rq.args[1]}, rq.cfg);
  const nf::FieldElement beta = point_of(ps[1]);
  const numeric::Precision prec{rq.opt.precision_bits};
  const auto ball = numeric::eval_ball(ps[0], numeric::element_ball(beta, prec), prec);
  Outcome out;
  out.normal_forms = {print(ps[0]), print(ps[1])};
  out.result = {{"value", print(ec::eval_at(ps[0], beta))}, {"bits", prec.bits}};
  if (ball.is_whole_plane()) {
    out.result["enclosure"] = {{"whole_plane", true}};
  } else {
    out.result["enclosure"] = {{"whole_plane", false},
                               {"re", decimal(ball.mid_re().to_rational(), 20)},
                               {"im", decimal(ball.mid_im().to_rational(), 20)},
                               {"radius", scientific(ball.radius().to_rational())}};
  }
  return out;
}

struct CommandEntry {
  std::size_t min_args, max_args;
  Outcome (*run)(const Request&);
};

const std::map<std::string, CommandEntry>& table() {
  static const std::map<std::string, CommandEntry> t = {
      {"normalize", {1, 1, cmd_normalize}}, {"height", {1, 1, cmd_height}},
      {"depth", {1, 1, cmd_depth}},         {"decompose", {1, 1, cmd_decompose}},
      {"refine", {1, 1, cmd_refine}},       {"zeros", {1, 1, cmd_zeros}},
      {"iszero", {1, 2, cmd_iszero}},       {"common-zeros", {2, 2, cmd_common_zeros}},
      {"eval", {2, 2, cmd_eval}},
  };
  return t;
}

json envelope(const std::string& command, const std::vector<std::string>& args, const CommandOptions& opt) {
  json doc = {{"schema", kSchema}, {"command", command}, {"inputs", args}};
  if (!opt.reproducible) doc["timestamp"] = timestamp();
  return doc;
}

json flags(bool schanuel, bool complete) {
  return {{"assumes_schanuel", schanuel}, {"complete_for_all_common_zeros", complete}};
}

json diagnostics(const CommandOptions& opt, json messages) {
  return {{"precision_bits", opt.precision_bits}, {"numeric_check", opt.numeric_check}, {"messages", std::move(messages)}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : table()) v.push_back(k);
    return v;
  }();
  return names;
}

json run_command(const std::string& command, const std::vector<std::string>& args, const CommandOptions& opt) {
  const auto it = table().find(command);
  if (it == table().end()) throw Error(ErrorCode::SyntaxError, "unknown command '" + command + "'");
  const CommandEntry& entry = it->second;
  if (args.size() < entry.min_args || args.size() > entry.max_args) {
    throw Error(ErrorCode::SyntaxError, "wrong number of arguments for '" + command + "'");
  }
  if (opt.precision_bits < 16) throw Error(ErrorCode::SyntaxError, "precision must be at least 16 bits");
  if (opt.max_height < 0) throw Error(ErrorCode::SyntaxError, "max height must be non-negative");
  Request rq{args, opt, default_config()};
  rq.cfg.max_height = opt.max_height;
  Outcome out = entry.run(rq);
  json doc = envelope(command, args, opt);
  doc["normal_forms"] = out.normal_forms;
  doc["result"] = std::move(out.result);
  doc["flags"] = flags(out.assumes_schanuel, out.complete);
  doc["diagnostics"] = diagnostics(opt, std::move(out.messages));
  return doc;
}

json error_document(const std::string& command, const std::vector<std::string>& args, const Error& e,
                    const CommandOptions& opt) {
  json doc = envelope(command, args, opt);
  json err = {{"kind", error_code_name(e.code())}, {"message", e.what()}};
  if (e.position() != Error::npos) err["position"] = e.position();
  doc["error"] = err;
  doc["flags"] = flags(false, false);
  doc["diagnostics"] = diagnostics(opt, json::array());
  return doc;
}

}  // namespace expzero::fe
