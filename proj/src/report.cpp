#include "selfsim/report.hpp"

namespace selfsim {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "==";
    case Relation::LessEq: return "<=";
    case Relation::GreaterEq: return ">=";
    case Relation::Less: return "<";
    case Relation::Info: return "info";
  }
  return "?";
}

namespace {

long double as_real(const Number& x) {
  return std::visit([](auto v) { return static_cast<long double>(v); }, x);
}

bool compare(const Number& measured, const Number& bound, Relation r) {
  if (std::holds_alternative<std::int64_t>(measured) &&
      std::holds_alternative<std::int64_t>(bound)) {
    auto m = std::get<std::int64_t>(measured), b = std::get<std::int64_t>(bound);
    switch (r) {
      case Relation::Equal: return m == b;
      case Relation::LessEq: return m <= b;
      case Relation::GreaterEq: return m >= b;
      case Relation::Less: return m < b;
      case Relation::Info: return true;
    }
  }
  const long double m = as_real(measured), b = as_real(bound);
  switch (r) {
    case Relation::Equal: return m == b;
    case Relation::LessEq: return m <= b;
    case Relation::GreaterEq: return m >= b;
    case Relation::Less: return m < b;
    case Relation::Info: return true;
  }
  return false;
}

}  // namespace

bool TheoremReport::exact(int n, std::string quantity, std::int64_t predicted,
                          std::int64_t measured) {
  return bound(n, std::move(quantity), predicted, measured, Relation::Equal);
}

bool TheoremReport::bound(int n, std::string quantity, Number bound_value, Number measured,
                          Relation relation) {
  const bool ok = compare(measured, bound_value, relation);
  if (!ok) {
    witnesses.push_back(quantity + " at n=" + std::to_string(n));
    verdict = Verdict::Fail;
  }
  measurements.push_back({n, std::move(quantity), bound_value, measured, relation, ok});
  return ok;
}

bool TheoremReport::flag(int n, std::string quantity, bool expected, bool measured) {
  return exact(n, std::move(quantity), expected ? 1 : 0, measured ? 1 : 0);
}

void TheoremReport::info(int n, std::string quantity, Number value) {
  measurements.push_back({n, std::move(quantity), value, value, Relation::Info, true});
}

void TheoremReport::inapplicable(std::string why) {
  if (verdict != Verdict::Fail) verdict = Verdict::Inapplicable;
  notes.push_back(std::move(why));
}

void TheoremReport::fail(std::string witness) {
  verdict = Verdict::Fail;
  witnesses.push_back(std::move(witness));
}

}  // namespace selfsim
