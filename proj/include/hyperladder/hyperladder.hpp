#pragma once

#include "hyperladder/rational.hpp"
#include "hyperladder/funexpr.hpp"
#include "hyperladder/inner.hpp"
#include "hyperladder/operators.hpp"
#include "hyperladder/identities.hpp"
#include "hyperladder/spectra.hpp"
#include "hyperladder/numeric.hpp"
#include "hyperladder/crosscheck.hpp"
#include "hyperladder/io.hpp"
