#ifndef HURWITZ_HURWITZ_HPP
#define HURWITZ_HURWITZ_HPP

#include "arith.hpp"
#include "branch_data.hpp"
#include "cache.hpp"
#include "closed_form.hpp"
#include "error.hpp"
#include "octagon.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "realizations.hpp"
#include "record.hpp"
#include "table.hpp"
#include "triple.hpp"

#endif
