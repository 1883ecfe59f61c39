#pragma once

namespace auctionlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "auctionlab";

}  // namespace auctionlab
