#pragma once

#include "mim/bayes.hpp"
#include "mim/coefficient.hpp"
#include "mim/distribution.hpp"
#include "mim/error.hpp"
#include "mim/experiments.hpp"
#include "mim/measures.hpp"
#include "mim/numerics.hpp"
#include "mim/prior.hpp"
#include "mim/sweep_table.hpp"
