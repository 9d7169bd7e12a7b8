/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * rischan: RIS-aided channel estimation simulator
 * Copyright (C) 2026 The rischan authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RISCHAN_H
#define RISCHAN_H

/* C interface to the rischan simulator. All handles are opaque; every call
   returns a status code and leaves a message in rischan_last_error(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(RISCHAN_BUILDING_LIBRARY)
#define RISCHAN_API __declspec(dllexport)
#else
#define RISCHAN_API __declspec(dllimport)
#endif
#else
#define RISCHAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rischan_status
{
    RISCHAN_OK = 0,
    RISCHAN_INVALID_ARGUMENT = 1,
    RISCHAN_DIMENSION = 2,
    RISCHAN_RANK = 3,
    RISCHAN_SINGULAR = 4,
    RISCHAN_CONFIG = 5,
    RISCHAN_IO = 6,
    RISCHAN_INFEASIBLE = 7,
    RISCHAN_INTERNAL = 99
} rischan_status;

typedef struct rischan_config rischan_config;
typedef struct rischan_table rischan_table;

typedef struct rischan_ranks
{
    int bs;    /* r_g' */
    int ris;   /* r_hg */
    int total; /* r_x = bs * ris */
} rischan_ranks;

typedef struct rischan_row
{
    double axis;
    const char *estimator;
    const char *design;
    const char *emi_mode;
    double nmse_db_closed; /* NaN where undefined */
    double nmse_db_mc;     /* NaN without trials */
    double stderr_db;
    int64_t trials;
    double seconds;
    const char *error; /* empty string on success */
} rischan_row;

typedef void (*rischan_check_callback)(const char *name, int passed, const char *detail, void *user);

RISCHAN_API const char *rischan_version(void);
RISCHAN_API const char *rischan_status_name(rischan_status status);

/* Message of the last failing call on this thread; empty after success. */
RISCHAN_API const char *rischan_last_error(void);

/* profile: "desk" or "paper" (NULL means "paper"). */
RISCHAN_API rischan_status rischan_config_load(const char *path, const char *profile, rischan_config **out);
RISCHAN_API rischan_status rischan_config_load_string(const char *text, const char *profile, rischan_config **out);
RISCHAN_API rischan_status rischan_config_set_seed(rischan_config *cfg, uint64_t seed);
RISCHAN_API rischan_status rischan_config_set_trials(rischan_config *cfg, int64_t trials);
RISCHAN_API rischan_status rischan_config_set_timing(rischan_config *cfg, int enabled);
RISCHAN_API rischan_status rischan_config_output(const rischan_config *cfg, const char **path);
RISCHAN_API void rischan_config_free(rischan_config *cfg);

/* Effective ranks of the conservative subspace at the base geometry. */
RISCHAN_API rischan_status rischan_ranks_of(const rischan_config *cfg, rischan_ranks *out);

RISCHAN_API rischan_status rischan_run(const rischan_config *cfg, rischan_table **out);
RISCHAN_API size_t rischan_table_rows(const rischan_table *table);
/* Strings in *row stay valid until the table is freed. */
RISCHAN_API rischan_status rischan_table_row(const rischan_table *table, size_t index, rischan_row *row);
RISCHAN_API rischan_status rischan_table_write_csv(const rischan_table *table, const char *path);
RISCHAN_API void rischan_table_free(rischan_table *table);

/* Runs the invariant suite; *failures receives the number of failed checks. */
RISCHAN_API rischan_status rischan_check(rischan_check_callback cb, void *user, int *failures);

#ifdef __cplusplus
}
#endif

#endif
