#include "mckay/checker.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "mckay/matching.hpp"
#include "mckay/structure.hpp"
#include "mckay/symfast.hpp"

namespace mckay {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::optional<unsigned> symmetric_degree(const GroupSpec& spec) {
  if (const Family* f = spec.family(); f && f->kind == FamilyKind::symmetric) return f->n;
  return std::nullopt;
}

}  // namespace

const char* to_string(Route r) {
  switch (r) {
    case Route::trivial: return "trivial";
    case Route::generic: return "generic";
    case Route::symfast: return "symfast";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::bijection: return "bijection";
    case Verdict::no_bijection: return "no_bijection";
    case Verdict::count_mismatch: return "count_mismatch";
    case Verdict::out_of_scale: return "out_of_scale";
  }
  return "?";
}

const char* to_string(CellKind k) {
  switch (k) {
    case CellKind::trivial: return "trivial";
    case CellKind::diagonal: return "diagonal";
    case CellKind::checked: return "checked";
    case CellKind::out_of_scale: return "out_of_scale";
  }
  return "?";
}

GroupContext::GroupContext(GroupSpec spec, std::size_t cap) : spec_(std::move(spec)), cap_(cap) {
  expand_generators(spec_);  // validates the spec up front
}

const std::optional<BigInt>& GroupContext::order() {
  if (!order_done_) {
    order_done_ = true;
    if (const Family* f = spec_.family()) {
      order_ = family_order(*f);
    } else if (const ElementTable* t = table()) {
      order_ = t->order();
    }
  }
  return order_;
}

const ElementTable* GroupContext::table() {
  if (!table_done_) {
    table_done_ = true;
    const auto start = Clock::now();
    try {
      table_ = std::make_unique<ElementTable>(generate_elements(spec_, cap_));
    } catch (const CapExceeded&) {
      table_.reset();
    }
    enumerate_ms_ += ms_since(start);
  }
  return table_.get();
}

const std::optional<DegreeMultiset>& GroupContext::degrees() {
  if (!degrees_done_) {
    degrees_done_ = true;
    auto n = symmetric_degree(spec_);
    if (n && *n <= kDefaultPartitionBound) {
      const auto start = Clock::now();
      degrees_ = symmetric_degrees(*n);
      degrees_ms_ += ms_since(start);
    } else {
      degrees_ = enumerated_degrees();
    }
  }
  return degrees_;
}

const std::optional<DegreeMultiset>& GroupContext::enumerated_degrees() {
  if (!enumerated_done_) {
    enumerated_done_ = true;
    if (const ElementTable* t = table()) {
      const auto start = Clock::now();
      enumerated_ = character_degrees(*t);
      degrees_ms_ += ms_since(start);
    }
  }
  return enumerated_;
}

double GroupContext::take_enumerate_ms() { return std::exchange(enumerate_ms_, 0.0); }
double GroupContext::take_degrees_ms() { return std::exchange(degrees_ms_, 0.0); }

CheckReport degrees_command(GroupContext& ctx, Prime p) {
  const auto start = Clock::now();
  CheckReport r;
  r.group_id = ctx.spec().id;
  r.prime = p.value();
  r.group_order = ctx.order();
  const auto sym_n = symmetric_degree(ctx.spec());

  // The p'-degrees of S_n come from hook lengths even when the normaliser
  // side is out of reach.
  if (sym_n && *sym_n <= kDefaultPartitionBound) {
    const auto t0 = Clock::now();
    r.a_degrees = symmetric_pprime_degrees(*sym_n, p).degrees;
    r.elapsed_ms.degrees += ms_since(t0);
  }

  if (r.group_order && !p.divides(*r.group_order)) {
    r.route = Route::trivial;
    if (const auto& d = ctx.degrees()) {
      r.a_degrees = pprime_filter(*d, p).degrees;
      r.b_degrees = r.a_degrees;
    }
  } else if (sym_n && *sym_n <= kDefaultPartitionBound && *sym_n >= p.value() &&
             std::uint64_t{*sym_n} < p.value() * p.value()) {
    r.route = Route::symfast;
    const auto t0 = Clock::now();
    r.b_degrees = normalizer_pprime_degrees(*sym_n, p).degrees;
    r.elapsed_ms.degrees += ms_since(t0);
  } else if (r.group_order && *r.group_order <= ctx.cap() && ctx.table()) {
    r.route = Route::generic;
    const ElementTable& table = *ctx.table();
    r.elapsed_ms.enumerate += ctx.take_enumerate_ms();

    auto t0 = Clock::now();
    const Subgroup sylow = sylow_subgroup(table, p);
    r.elapsed_ms.sylow += ms_since(t0);

    t0 = Clock::now();
    const Subgroup norm = normalizer(table, sylow);
    const ElementTable norm_table = norm.materialize(table);
    r.elapsed_ms.normalizer += ms_since(t0);

    r.a_degrees = pprime_filter(*ctx.enumerated_degrees(), p).degrees;
    t0 = Clock::now();
    r.b_degrees = pprime_filter(character_degrees(norm_table), p).degrees;
    r.elapsed_ms.degrees += ms_since(t0);
  }
  r.elapsed_ms.enumerate += ctx.take_enumerate_ms();
  r.elapsed_ms.degrees += ctx.take_degrees_ms();
  r.elapsed_ms.total = ms_since(start);
  return r;
}

CheckReport degrees_command(const GroupSpec& spec, Prime p, std::size_t cap) {
  GroupContext ctx(spec, cap);
  return degrees_command(ctx, p);
}

CheckReport check_group(GroupContext& ctx, Prime p) {
  const auto start = Clock::now();
  CheckReport r = degrees_command(ctx, p);
  if (!r.route || !r.a_degrees || !r.b_degrees) {
    // Only p not dividing |G| decides the question without degree lists.
    if (r.route == Route::trivial) {
      r.verdict = Verdict::bijection;
    } else {
      r.route.reset();
      r.verdict = Verdict::out_of_scale;
      r.b_degrees.reset();
    }
    r.elapsed_ms.total = ms_since(start);
    return r;
  }

  const auto t0 = Clock::now();
  const DivisibilityGraph g = build_graph(*r.a_degrees, *r.b_degrees);
  MatchingResult result;
  if (r.route == Route::trivial) {
    Bijection identity;
    for (std::size_t i = 0; i < g.a.size(); ++i) identity.assignment.push_back(i);
    result = identity;
  } else {
    result = kuhn_match(g);
  }
  if (!verify_result(g, result))
    throw std::logic_error("matching certificate failed verification for " + r.group_id);

  if (const auto* bij = std::get_if<Bijection>(&result)) {
    r.verdict = Verdict::bijection;
    r.bijection.emplace();
    for (std::size_t i = 0; i < g.a.size(); ++i)
      r.bijection->emplace_back(g.a[i], g.b[bij->assignment[i]]);
  } else if (const auto* hv = std::get_if<HallViolator>(&result)) {
    r.verdict = Verdict::no_bijection;
    r.violator.emplace();
    for (std::size_t i : hv->a_indices) r.violator->push_back(g.a[i]);
  } else {
    r.verdict = Verdict::count_mismatch;
  }
  r.elapsed_ms.match = ms_since(t0);
  r.elapsed_ms.total = ms_since(start);
  return r;
}

CheckReport check_group(const GroupSpec& spec, Prime p, std::size_t cap) {
  GroupContext ctx(spec, cap);
  return check_group(ctx, p);
}

SymmetricTable symmetric_table(const std::vector<std::uint64_t>& primes, unsigned max_n,
                               std::size_t cap) {
  if (!std::is_sorted(primes.begin(), primes.end()))
    throw std::invalid_argument("symmetric_table: primes must be ascending");
  SymmetricTable t;
  t.primes = primes;
  for (auto q : primes) {
    Prime checked(q);
    if (q <= max_n) t.columns.push_back(static_cast<unsigned>(checked.value()));
  }
  for (auto pv : primes) {
    const Prime p(pv);
    auto& row = t.cells.emplace_back();
    for (unsigned n : t.columns) {
      GroupContext ctx(GroupSpec::from_family(Family::symmetric(n)), cap);
      CheckReport rep = check_group(ctx, p);
      CellKind kind = CellKind::checked;
      if (pv > n) kind = CellKind::trivial;
      else if (pv == n) kind = CellKind::diagonal;
      if (rep.verdict == Verdict::out_of_scale) kind = CellKind::out_of_scale;
      row.push_back({pv, n, kind, std::move(rep)});
    }
  }
  return t;
}

}  // namespace mckay
