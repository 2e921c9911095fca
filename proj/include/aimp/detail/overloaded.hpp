#pragma once

namespace aimp::detail {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

}  // namespace aimp::detail
