#pragma once

#include "tagcase/analysis.hpp"
#include "tagcase/bits.hpp"
#include "tagcase/engine.hpp"
#include "tagcase/errors.hpp"
#include "tagcase/lexer.hpp"
