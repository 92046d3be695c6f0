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

#include "expzero/expzero.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "expcore/exppoly.hpp"
#include "frontend/commands.hpp"
#include "frontend/parser.hpp"
#include "frontend/printer.hpp"
#include "zerofinder/zeros.hpp"

using namespace expzero;

struct ez_context {
  fe::CommandOptions opt;
};

struct ez_expr {
  ec::ExpPoly value;
};

struct ez_zeros {
  zf::ZeroReport report;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_kind;

ez_status fail(ErrorClass c, const std::string& kind, const std::string& msg) {
  last_kind = kind;
  last_error = msg;
  return static_cast<ez_status>(static_cast<int>(c));
}

// Runs f, translating exceptions into status codes.
template <typename F>
ez_status guard(F&& f) {
  last_error.clear();
  last_kind.clear();
  try {
    f();
    return EZ_OK;
  } catch (const Error& e) {
    return fail(e.error_class(), error_code_name(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ErrorClass::Resource, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return fail(ErrorClass::Internal, "InvariantViolation", e.what());
  }
}

ez_status null_arg() { return fail(ErrorClass::Input, "NullArgument", "null argument"); }

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const fe::CommandOptions& options(const ez_context* ctx) {
  static const fe::CommandOptions defaults;
  return ctx ? ctx->opt : defaults;
}

Config config(const ez_context* ctx) {
  Config cfg = default_config();
  cfg.max_height = options(ctx).max_height;
  return cfg;
}

zf::ZeroOptions zero_options(const ez_context* ctx) {
  zf::ZeroOptions o;
  o.cfg = config(ctx);
  o.numeric_check = options(ctx).numeric_check;
  o.precision_bits = options(ctx).precision_bits;
  return o;
}

template <typename Op>
ez_status binary(const ez_expr* a, const ez_expr* b, ez_expr** out, Op op) {
  if (!a || !b || !out) return null_arg();
  return guard([&] {
    const nf::FieldPtr f = ec::common_field(a->value, b->value);
    *out = new ez_expr{op(ec::lift(a->value, f), ec::lift(b->value, f))};
  });
}

}  // namespace

extern "C" {

const char* ez_version(void) { return "0.1.0"; }
const char* ez_last_error(void) { return last_error.c_str(); }
const char* ez_last_error_kind(void) { return last_kind.c_str(); }
void ez_string_free(char* s) { std::free(s); }

ez_status ez_context_new(ez_context** out) {
  if (!out) return null_arg();
  return guard([&] { *out = new ez_context{}; });
}

void ez_context_free(ez_context* ctx) { delete ctx; }

ez_status ez_context_set_precision(ez_context* ctx, int bits) {
  if (!ctx) return null_arg();
  if (bits < 16) return fail(ErrorClass::Input, "SyntaxError", "precision must be at least 16 bits");
  ctx->opt.precision_bits = bits;
  return EZ_OK;
}

ez_status ez_context_set_max_height(ez_context* ctx, int height) {
  if (!ctx) return null_arg();
  if (height < 0) return fail(ErrorClass::Input, "SyntaxError", "max height must be non-negative");
  ctx->opt.max_height = height;
  return EZ_OK;
}

ez_status ez_context_set_numeric_check(ez_context* ctx, int enabled) {
  if (!ctx) return null_arg();
  ctx->opt.numeric_check = enabled != 0;
  return EZ_OK;
}

ez_status ez_context_set_reproducible(ez_context* ctx, int enabled) {
  if (!ctx) return null_arg();
  ctx->opt.reproducible = enabled != 0;
  return EZ_OK;
}

ez_status ez_parse(const ez_context* ctx, const char* text, ez_expr** out) {
  if (!text || !out) return null_arg();
  return guard([&] { *out = new ez_expr{fe::parse(text, config(ctx))}; });
}

void ez_expr_free(ez_expr* e) { delete e; }

ez_status ez_expr_print(const ez_expr* e, char** out) {
  if (!e || !out) return null_arg();
  return guard([&] { *out = dup(fe::print(e->value)); });
}

ez_status ez_expr_height(const ez_expr* e, int* out) {
  if (!e || !out) return null_arg();
  *out = e->value.height();
  return guard([] {});
}

ez_status ez_expr_depth(const ez_expr* e, int* out) {
  if (!e || !out) return null_arg();
  return guard([&] { *out = ec::depth(e->value); });
}

ez_status ez_expr_is_zero(const ez_expr* e, int* out) {
  if (!e || !out) return null_arg();
  *out = e->value.is_zero() ? 1 : 0;
  return guard([] {});
}

ez_status ez_expr_equal(const ez_expr* a, const ez_expr* b, int* out) {
  if (!a || !b || !out) return null_arg();
  return guard([&] {
    const nf::FieldPtr f = ec::common_field(a->value, b->value);
    *out = ec::lift(a->value, f) == ec::lift(b->value, f) ? 1 : 0;
  });
}

ez_status ez_expr_add(const ez_expr* a, const ez_expr* b, ez_expr** out) {
  return binary(a, b, out, [](const ec::ExpPoly& x, const ec::ExpPoly& y) { return x + y; });
}

ez_status ez_expr_sub(const ez_expr* a, const ez_expr* b, ez_expr** out) {
  return binary(a, b, out, [](const ec::ExpPoly& x, const ec::ExpPoly& y) { return x - y; });
}

ez_status ez_expr_mul(const ez_expr* a, const ez_expr* b, ez_expr** out) {
  return binary(a, b, out, [](const ec::ExpPoly& x, const ec::ExpPoly& y) { return x * y; });
}

ez_status ez_expr_exp(const ez_expr* a, ez_expr** out) {
  if (!a || !out) return null_arg();
  return guard([&] { *out = new ez_expr{ec::ep_exp(a->value)}; });
}

ez_status ez_zeros_find(const ez_context* ctx, const ez_expr* p, ez_zeros** out) {
  if (!p || !out) return null_arg();
  return guard([&] { *out = new ez_zeros{zf::algebraic_zeros(p->value, zero_options(ctx))}; });
}

ez_status ez_zeros_common(const ez_context* ctx, const ez_expr* p, const ez_expr* q, ez_zeros** out) {
  if (!p || !q || !out) return null_arg();
  return guard([&] {
    const nf::FieldPtr f = ec::common_field(p->value, q->value);
    *out = new ez_zeros{zf::common_zeros(ec::lift(p->value, f), ec::lift(q->value, f), zero_options(ctx))};
  });
}

void ez_zeros_free(ez_zeros* z) { delete z; }

size_t ez_zeros_count(const ez_zeros* z) { return z ? z->report.zeros.size() : 0; }

ez_status ez_zeros_get(const ez_zeros* z, size_t i, char** out) {
  if (!z || !out) return null_arg();
  if (i >= z->report.zeros.size()) return fail(ErrorClass::Input, "OutOfRange", "zero index out of range");
  return guard([&] { *out = dup(fe::print(z->report.zeros[i])); });
}

ez_status ez_zeros_approx(const ez_zeros* z, size_t i, int digits, char** out) {
  if (!z || !out) return null_arg();
  if (i >= z->report.zeros.size()) return fail(ErrorClass::Input, "OutOfRange", "zero index out of range");
  if (digits < 1) return fail(ErrorClass::Input, "OutOfRange", "digits must be positive");
  return guard([&] { *out = dup(fe::approx(z->report.zeros[i], digits)); });
}

int ez_zeros_assumes_schanuel(const ez_zeros* z) { return z && z->report.assumes_schanuel ? 1 : 0; }
int ez_zeros_complete(const ez_zeros* z) { return z && z->report.complete_for_all_common_zeros ? 1 : 0; }

ez_status ez_run_command(const ez_context* ctx, const char* command, const char* const* args, size_t nargs, int pretty,
                         char** out) {
  if (!command || (nargs > 0 && !args)) return null_arg();
  std::vector<std::string> argv;
  for (size_t i = 0; i < nargs; ++i) {
    if (!args[i]) return null_arg();
    argv.emplace_back(args[i]);
  }
  const int indent = pretty ? 2 : -1;
  if (out) *out = nullptr;
  std::optional<nlohmann::json> error_doc;
  const ez_status st = guard([&] {
    try {
      const nlohmann::json doc = fe::run_command(command, argv, options(ctx));
      if (out) *out = dup(doc.dump(indent));
    } catch (const Error& e) {
      error_doc = fe::error_document(command, argv, e, options(ctx));
      throw;
    }
  });
  if (st != EZ_OK && error_doc && out) {
    const std::string kind = last_kind, msg = last_error;
    try {
      *out = dup(error_doc->dump(indent));
    } catch (...) {
      *out = nullptr;
    }
    last_kind = kind;
    last_error = msg;
  }
  return st;
}

}  // extern "C"
