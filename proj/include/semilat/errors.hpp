#pragma once

#include <stdexcept>
#include <string>

namespace semilat {

// Base of every contract violation this library reports.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGround : Error { using Error::Error; };
struct NotInFamily : Error { using Error::Error; };
struct NotASemicharacter : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct BadArguments : Error { using Error::Error; };
struct DegenerateBase : Error { using Error::Error; };
struct IncompleteTable : Error { using Error::Error; };

// Reader failures; messages carry "line N:" context.
struct ParseError : Error { using Error::Error; };

}  // namespace semilat
