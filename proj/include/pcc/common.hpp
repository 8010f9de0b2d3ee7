#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcc {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when a computation exceeds a configured cap (degree, pair queue,
// retry count, ...). Callers report this as a clean outcome, not a crash.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Visits every size-k subset of {1,...,n} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

// Runs fn(i) for i in [0, count), spread over up to `jobs` threads.
// fn must be safe to call concurrently for distinct i.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace pcc
