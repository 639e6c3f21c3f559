// Umbrella header pulling in the whole library.
#pragma once

#include "aplang/alphabet.hpp"
#include "aplang/automaton.hpp"
#include "aplang/contextual.hpp"
#include "aplang/decide.hpp"
#include "aplang/decision.hpp"
#include "aplang/error.hpp"
#include "aplang/factor.hpp"
#include "aplang/json_io.hpp"
#include "aplang/regex.hpp"
#include "aplang/sequence.hpp"
#include "aplang/words.hpp"
