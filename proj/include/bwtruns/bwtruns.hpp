#pragma once

#include "bwtruns/bwt.hpp"
#include "bwtruns/closed_forms.hpp"
#include "bwtruns/cyclic_sort.hpp"
#include "bwtruns/errors.hpp"
#include "bwtruns/rho_search.hpp"
#include "bwtruns/standard_words.hpp"
#include "bwtruns/word.hpp"
