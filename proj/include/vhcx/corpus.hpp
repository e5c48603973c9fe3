#pragma once

#include <string_view>

namespace vhcx::corpus {

  // Contents of corpus/delta.vh, compiled in.
  std::string_view delta_text() noexcept;

}  // namespace vhcx::corpus
