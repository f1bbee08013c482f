#include "footsort/decider.hpp"

#include <algorithm>

#include "footsort/oracle.hpp"

namespace footsort {
namespace {

class Step {
 public:
  Step(SortingState& state, ReductionTrace& trace, DecideReport* report, const DecideOptions& options)
      : st_(state), trace_(trace), report_(report), options_(options) {}

  StepResult run() {
    if (st_.second().empty()) return StepResult::kSortable;
    if (report_) ++report_->iterations;

    const IndexEntry a_second = *st_.second().front();
    const Color a = st_.node(a_second.node).color;
    const IndexEntry a_first = *st_.pos(a).front();
    const auto b_entry = st_.lonely().at_least(lonely_floor());
    const std::size_t all_num = st_.all().count_between(a_first.position, a_second.position);
    const std::size_t lonely_num = st_.lonely().count_between(a_first.position, a_second.position);

    if (b_entry && b_entry->position < a_first.position) {
      take(Branch::kCase1);
      reduce(st_.node(b_entry->node).color);
    } else if (!b_entry || b_entry->position > a_second.position) {
      if (all_num != 1) {
        if (!minimal(a_first.position)) {
          take(Branch::kCase2NotMinimal);
          return StepResult::kNotSortable;
        }
        take(Branch::kCase2);
        reduce(a);
      } else {
        take(Branch::kCase2Exception);
        case2_exception(a);
      }
    } else {
      const Color b = st_.node(b_entry->node).color;
      if (!minimal(a_first.position)) {
        take(Branch::kCase3NotMinimal);
        reduce(b);
      } else if (st_.next(a_first.node) == b_entry->node) {
        take(Branch::kCase3Adjacent);
        reduce(b);
      } else if (all_num != lonely_num + 1) {
        take(Branch::kCase3Reduce);
        reduce(a);
      } else {
        take(Branch::kCase3Exception);
        case3_exception(a, b);
      }
    }

    // A color whose second sock now sits inside the prefix would have to be
    // greater than itself.
    const auto front = st_.second().front();
    if (front && st_.order().dist_min_pos && front->position <= *st_.order().dist_min_pos) {
      return StepResult::kNotSortable;
    }
    return st_.second().empty() ? StepResult::kSortable : StepResult::kContinue;
  }

 private:
  // Smallest position a minimal lonely letter may occupy.
  Position lonely_floor() const {
    const auto& end = st_.order().dist_min_pos;
    if (!end) return 0;
    if (options_.literal_minimality_test) return *end;
    const auto d = st_.distinguished();
    return d ? d->position : *end;
  }

  // A letter first seen at `first` is minimal iff no live letter lies after
  // it within the prefix.
  bool minimal(Position first) const {
    const auto& end = st_.order().dist_min_pos;
    if (!end) return true;
    if (options_.literal_minimality_test) return !(*end > first);
    const auto d = st_.distinguished();
    return !d || d->position <= first;
  }

  void take(Branch b) {
    if (report_) ++report_->branch_counts[static_cast<int>(b)];
  }

  void reduce(Color c) {
    trace_.reduced_colors.push_back(c);
    if (report_) ++report_->reductions;
    st_.reduce_color(c);
  }

  // Exactly one letter z between the first two a's, no minimal lonely letter
  // up to the second a.
  void case2_exception(Color a) {
    const IndexEntry a_first = *st_.pos(a).nth_small(0);
    const IndexEntry a_second = *st_.pos(a).nth_small(1);
    const Color z = st_.node(st_.all().after(a_first.position)->node).color;

    if (!minimal(a_first.position)) {
      reduce(z);
      return;
    }
    // a's and z's right after the second a would be removed by either
    // reduction anyway; drop them to reach the first other letter x.
    NodeHandle x = st_.next(a_second.node);
    while (x != kNoNode && (st_.node(x).color == a || st_.node(x).color == z)) {
      st_.delete_node(x);
      x = st_.next(a_second.node);
    }
    if (x == kNoNode) {
      reduce(a);
      return;
    }
    const Position x_pos = st_.node(x).position;
    const auto a_after = st_.pos(a).after(x_pos);
    const auto z_after = st_.pos(z).after(x_pos);
    if (!a_after) {
      reduce(a);
    } else if (!z_after) {
      reduce(z);
    } else if (a_after->position < z_after->position) {
      reduce(a);
    } else {
      reduce(z);
    }
  }

  // Between the first two a's: one unlonely z (right after the first a)
  // followed by lonely letters, the first of which is b.
  void case3_exception(Color a, Color b) {
    const IndexEntry a_first = *st_.pos(a).nth_small(0);
    const IndexEntry a_second = *st_.pos(a).nth_small(1);
    const Color z = st_.node(st_.all().after(a_first.position)->node).color;
    const auto a_last = st_.pos(a).size() >= 3 ? st_.pos(a).back() : std::nullopt;
    const auto z_pos = st_.pos(z).after(a_second.position);

    if (a_last && z_pos && z_pos->position < a_last->position) {
      reduce(b);
      return;
    }
    NodeHandle x = st_.next(a_second.node);
    if (x != kNoNode && st_.node(x).color == z) x = st_.next(x);
    if (x == kNoNode || !st_.pos(z).after(st_.node(x).position)) {
      reduce(b);
    } else {
      reduce(a);
    }
  }

  SortingState& st_;
  ReductionTrace& trace_;
  DecideReport* report_;
  const DecideOptions& options_;
};

}  // namespace

StepResult decide_step(SortingState& state, ReductionTrace& trace, DecideReport* report,
                       const DecideOptions& options) {
  const StepResult r = Step(state, trace, report, options).run();
  if (options.check_invariants) state.check_invariants();
  return r;
}

TotalOrderCertificate extract_certificate(const SockOrdering& input, const ReductionTrace& trace,
                                          const SortingState& final_state) {
  TotalOrderCertificate cert;
  cert.ascending = trace.reduced_colors;
  const auto rest = final_state.list_colors();
  cert.ascending.insert(cert.ascending.end(), rest.rbegin(), rest.rend());
  bool valid = false;
  try {
    valid = oracle::check_with_order(input, cert);
  } catch (const std::invalid_argument& e) {
    throw CertificateError(std::string("certificate does not cover the alphabet: ") + e.what());
  }
  if (!valid) throw CertificateError("certificate fails the forbidden-triple check");
  return cert;
}

Verdict decide(const SockOrdering& s, DecideReport* report, const DecideOptions& options) {
  if (report) *report = DecideReport{};
  if (report) report->n = s.size();
  if (s.alphabet_size() <= 1) {
    return Verdict::sortable(TotalOrderCertificate{s.alphabet()});
  }

  SortingState state(s);
  ReductionTrace trace;
  if (options.check_invariants) state.check_invariants();
  StepResult r = StepResult::kContinue;
  while (r == StepResult::kContinue) r = decide_step(state, trace, report, options);

  if (report) {
    report->map_ops = state.map_ops();
    report->deletions = state.deletions();
  }
  if (r == StepResult::kNotSortable) return Verdict::not_sortable();
  trace.sortable = true;
  return Verdict::sortable(extract_certificate(s, trace, state));
}

}  // namespace footsort
