#include "isoforest/product_tree.hpp"

namespace isoforest {

namespace {

template <class T>
BigNat product_impl(std::span<const T> xs) {
  switch (xs.size()) {
    case 0:
      return BigNat(1);
    case 1:
      return BigNat(xs[0]);
    case 2: {
      BigNat r(xs[0]);
      r *= BigNat(xs[1]);
      return r;
    }
    default: {
      const std::size_t half = (xs.size() + 1) / 2;
      return product_impl(xs.first(half)) * product_impl(xs.subspan(half));
    }
  }
}

}  // namespace

BigNat product(std::span<const BigNat> xs) { return product_impl(xs); }

BigNat product(std::span<const std::uint64_t> xs) { return product_impl(xs); }

}  // namespace isoforest
