#pragma once

#include "doxepi/checker.hpp"
#include "doxepi/diagnostics.hpp"
#include "doxepi/formula.hpp"
#include "doxepi/funcpair.hpp"
#include "doxepi/group.hpp"
#include "doxepi/relation.hpp"
#include "doxepi/signature.hpp"
#include "doxepi/state_function.hpp"
#include "doxepi/state_space.hpp"
#include "doxepi/synthesis.hpp"
#include "doxepi/traces.hpp"
