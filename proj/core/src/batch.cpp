#include "heckelab/batch.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <span>
#include <thread>

namespace heckelab {

namespace {

template <typename Fn>
void parallel_for(std::span<const ElementId> items, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || items.size() <= 1) {
    for (ElementId x : items) fn(x);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        fn(items[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = items.size();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(items.size()));
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

void compute_all_kl(const KLBasis& kl, unsigned jobs) {
  const GroupContext& ctx = kl.context();
  for (int l = 0; l <= ctx.max_length(); ++l)
    parallel_for(ctx.level(l), jobs, [&](ElementId x) { kl.kl_element(x); });
}

void compute_all_projective(const ProjectiveBasis& proj, unsigned jobs) {
  const GroupContext& ctx = proj.context();
  compute_all_kl(proj.kl(), jobs);
  for (int l = ctx.max_length(); l >= 0; --l)
    parallel_for(ctx.level(l), jobs, [&](ElementId x) { proj.proj_element(x); });
}

}  // namespace heckelab
