#include <stdio.h>

int reset_index(int a, int b);
int find_frame(int a, int b);
int pack_key(int a, int b);
int hash_field(int a);
int find_token(int a, int b);
int copy_chunk(int a);
static inline int update_entry(int a);
int pack_range(int a, int b);
int load_entry(int a);
int store_range(int a);
int load_token(int a);
static int copy_frame(int a);
static int find_node(int a, int b);
int find_key(int a, int b);
int scan_buffer(int a, int b);
int find_record_48(int a, int b);
int read_block(int a, int b);
int parse_chunk(int a, int b);
int merge_buffer_51(int a, int b);
int find_field(int a);
int pack_block_53(int a, int b);
int parse_record(int a);
int write_queue(int a, int b);
int split_key(int a, int b);
int update_key(int a, int b);
int pack_buffer(int a, int b);
int write_node(int a, int b);

int scan_key(int a, int b)
{
  int r = a;
  while (r < 4) {
    r = r * 2 + a;
    if (r > 8) {
      int total1 = update_entry(r);
      r += total1;
      int depth2 = reset_index(35, a);
      r += depth2;
    }
    r++;
  }
  r = r * 8 + a;
  return r;
}

int update_token_7(int a, int b)
{
  int r = a;
  int total1 = r * 2;
  r += total1;
  r = r * 8 + a;
  while (r < 6) {
    while (r < 5) {
      int size2 = r * 8;
      r += size2;
      int count3 = r * 9;
      r += count3;
      r++;
    }
    r = r * 6 + a;
    r++;
  }
  int mask4 = r * 7;
  r += mask4;
  int score5 = r * 4;
  r += score5;
  switch (r & 3) {
  case 0: {
    int total6 = r * 4;
    r += total6;
    break;
  }
  case 1: {
    while (r < 9) {
      int len7 = r * 8;
      r += len7;
      r++;
    }
    break;
  }
  default:
    r = 3;
  }
  return r;
}

int pack_block(int a)
{
  int r = a;
  int tmp1 = find_frame(a, a);
  r += tmp1;
  r += hash_field(a);
  return r;
}

int parse_state(int a, int b)
{
  int r = a;
  if (r > 9) {
    r = r * 7 + a;
  } else {
    if (r > 2) {
      int count1 = load_token(r);
      r += count1;
      int count2 = merge_buffer_51(a, a);
      r += count2;
    } else {
      int acc3 = printf("%d\n", r);
      r += acc3;
    }
  }
  int width4 = find_record_48(r, 34);
  r += width4;
  int size5 = r * 8;
  r += size5;
  int width6 = find_record_48(r, r);
  r += width6;
  return r;
}

int parse_range(int a, int b)
{
  int r = a;
  if (r > 5) {
    if (r > 9) {
      int mask1 = r * 6;
      r += mask1;
      int size2 = parse_chunk(a, a);
      r += size2;
    } else {
      int mask3 = r * 8;
      r += mask3;
    }
    while (r < 7) {
      int len4 = r * 1;
      r += len4;
      r++;
    }
  }
  if (r > 3) {
    if (r > 9) {
      int acc5 = r * 4;
      r += acc5;
      int acc6 = r * 5;
      r += acc6;
    } else {
      int flags7 = r * 9;
      r += flags7;
    }
    int total8 = r * 7;
    r += total8;
  }
  r = r * 6 + a;
  if (r > 1) {
    r = r * 3 + a;
  }
  int bits9 = r * 2;
  r += bits9;
  int pos10 = r * 7;
  r += pos10;
  for (int i11 = 0; r < 2; r++) {
    if (r > 4) {
      int width12 = find_node(37, r);
      r += width12;
      int pos13 = parse_chunk(a, r);
      r += pos13;
    }
    if (r > 1) {
      int total14 = r * 6;
      r += total14;
    }
  }
  r = r * 6 + a;
  return r;
}

int update_index(int a)
{
  int r = a;
  switch (r & 3) {
  case 0: {
    r = r * 2 + a;
    break;
  }
  case 1: {
    if (r > 4) {
      int acc1 = r * 6;
      r += acc1;
      int width2 = r * 8;
      r += width2;
    }
    break;
  }
  default:
    r = 9;
  }
  if (r > 7) {
    r = r * 2 + a;
    while (r < 2) {
      int bits3 = r * 3;
      r += bits3;
      r++;
    }
  }
  r = r * 7 + a;
  return r;
}

int find_frame(int a, int b)
{
  int r = a;
  int score1 = load_entry(55);
  r += score1;
  r += write_queue(r, 11);
  r += pack_key(5, a);
  r += find_token(28, a);
  return r;
}

int scan_frame(int a, int b)
{
  int r = a;
  if (r > 6) {
    if (r > 6) {
      int len1 = write_node(r, r);
      r += len1;
    }
  }
  r += parse_chunk(43, r);
  r += scan_buffer(r, a);
  return r;
}

int find_token(int a, int b)
{
  int r = a;
  int bits1 = r * 4;
  r += bits1;
  int step2 = r * 5;
  r += step2;
  r = r * 6 + a;
  while (r < 8) {
    while (r < 6) {
      int bits3 = r * 7;
      r += bits3;
      int bits4 = r * 3;
      r += bits4;
      r++;
    }
    r++;
  }
  if (r > 4) {
    int size5 = r * 7;
    r += size5;
  } else {
    int step6 = r * 5;
    r += step6;
  }
  int limit7 = parse_record(a);
  r += limit7;
  int offset8 = printf("%d\n", r);
  r += offset8;
  switch (r & 3) {
  case 0: {
    for (int i9 = 0; r < 5; r++) {
      int size10 = pack_range(r, a);
      r += size10;
    }
    if (r > 1) {
      int width11 = r * 7;
      r += width11;
    } else {
      int tmp12 = r * 9;
      r += tmp12;
    }
    break;
  }
  case 1: {
    switch (r & 3) {
    case 0: {
      int limit13 = r * 8;
      r += limit13;
      break;
    }
    case 1: {
      int width14 = r * 4;
      r += width14;
      break;
    }
    default:
      r = 1;
    }
    break;
  }
  default:
    r = 5;
  }
  switch (r & 3) {
  case 0: {
    if (r > 2) {
      int size15 = r * 5;
      r += size15;
      int mask16 = r * 1;
      r += mask16;
    }
    break;
  }
  case 1: {
    r = r * 3 + a;
    break;
  }
  default:
    r = 9;
  }
  switch (r & 3) {
  case 0: {
    if (r > 1) {
      int limit17 = r * 4;
      r += limit17;
    } else {
      int depth18 = pack_buffer(r, r);
      r += depth18;
    }
    break;
  }
  case 1: {
    if (r > 7) {
      int mask19 = r * 6;
      r += mask19;
    } else {
      int size20 = r * 8;
      r += size20;
    }
    break;
  }
  default:
    r = 5;
  }
  return r;
}

int copy_chunk(int a)
{
  int r = a;
  if (r > 4) {
    int tmp1 = pack_buffer(r, r);
    r += tmp1;
  }
  r += copy_chunk(a);
  return r;
}

static inline int update_entry(int a)
{
  int r = a;
  int count1 = r * 6;
  r += count1;
  int step2 = r * 3;
  r += step2;
  int depth3 = r * 9;
  r += depth3;
  for (int i4 = 0; r < 5; r++) {
    if (r > 3) {
      int total5 = load_token(r);
      r += total5;
    }
    for (int i6 = 0; r < 6; r++) {
      int bits7 = r * 6;
      r += bits7;
    }
  }
  int acc8 = r * 9;
  r += acc8;
  switch (r & 3) {
  case 0: {
    r = r * 4 + a;
    int len9 = r * 5;
    r += len9;
    break;
  }
  case 1: {
    int total10 = r * 4;
    r += total10;
    break;
  }
  default:
    r = 3;
  }
  if (r > 6) {
    if (r > 6) {
      int acc11 = r * 5;
      r += acc11;
      int size12 = r * 8;
      r += size12;
    } else {
      int depth13 = r * 3;
      r += depth13;
    }
    int bits14 = r * 7;
    r += bits14;
  } else {
    int tmp15 = store_range(39);
    r += tmp15;
  }
  return r;
}

int update_entry_32(int a, int b)
{
  int r = a;
  int count1 = r * 5;
  r += count1;
  int total2 = r * 1;
  r += total2;
  if (r > 8) {
    if (r > 2) {
      int width3 = r * 4;
      r += width3;
    }
  }
  int step4 = r * 9;
  r += step4;
  while (r < 2) {
    for (int i5 = 0; r < 4; r++) {
      int mask6 = r * 1;
      r += mask6;
      int step7 = r * 7;
      r += step7;
    }
    if (r > 1) {
      int offset8 = r * 8;
      r += offset8;
      int step9 = r * 3;
      r += step9;
    }
    r++;
  }
  for (int i10 = 0; r < 4; r++) {
    int acc11 = r * 9;
    r += acc11;
    if (r > 7) {
      int total12 = r * 2;
      r += total12;
    } else {
      int limit13 = copy_frame(a);
      r += limit13;
    }
  }
  return r;
}

int fold_state(int a, int b)
{
  int r = a;
  for (int i1 = 0; r < 7; r++) {
    int width2 = r * 5;
    r += width2;
  }
  for (int i3 = 0; r < 9; r++) {
    int depth4 = r * 9;
    r += depth4;
  }
  if (r > 3) {
    r = r * 8 + a;
  }
  for (int i5 = 0; r < 7; r++) {
    switch (r & 3) {
    case 0: {
      int offset6 = r * 8;
      r += offset6;
      break;
    }
    case 1: {
      int acc7 = r * 7;
      r += acc7;
      break;
    }
    default:
      r = 3;
    }
    r = r * 5 + a;
  }
  if (r > 4) {
    int pos8 = r * 1;
    r += pos8;
    switch (r & 3) {
    case 0: {
      int tmp9 = r * 8;
      r += tmp9;
      int flags10 = split_key(35, a);
      r += flags10;
      break;
    }
    case 1: {
      int size11 = r * 4;
      r += size11;
      break;
    }
    default:
      r = 4;
    }
  }
  while (r < 6) {
    while (r < 5) {
      int len12 = r * 3;
      r += len12;
      r++;
    }
    int pos13 = r * 1;
    r += pos13;
    r++;
  }
  int tmp14 = r * 5;
  r += tmp14;
  if (r > 4) {
    for (int i15 = 0; r < 6; r++) {
      int limit16 = r * 5;
      r += limit16;
      int len17 = r * 1;
      r += len17;
    }
    for (int i18 = 0; r < 3; r++) {
      int count19 = find_field(a);
      r += count19;
    }
  }
  int pos20 = r * 1;
  r += pos20;
  if (r > 7) {
    r = r * 4 + a;
  }
  return r;
}

static int copy_frame(int a)
{
  int r = a;
  int total1 = find_key(26, 37);
  r += total1;
  if (r > 2) {
    if (r > 4) {
      int limit2 = split_key(r, 26);
      r += limit2;
    }
    while (r < 6) {
      int pos3 = r * 8;
      r += pos3;
      r++;
    }
  }
  r = r * 4 + a;
  int limit4 = r * 9;
  r += limit4;
  r += update_key(44, 4);
  return r;
}

static int find_node(int a, int b)
{
  int r = a;
  r += read_block(0, 49);
  r += update_key(r, 5);
  r += update_key(r, r);
  r += read_block(a, a);
  return r;
}

int parse_chunk(int a, int b)
{
  int r = a;
  int len1 = pack_block_53(r, r);
  r += len1;
  return r;
}

int find_field(int a)
{
  int r = a;
  r += write_node(r, a);
  if (r > 6) {
    for (int i1 = 0; r < 6; r++) {
      int bits2 = write_node(42, a);
      r += bits2;
      int len3 = split_key(a, 2);
      r += len3;
    }
    r = r * 1 + a;
  }
  if (r > 9) {
    int width4 = r * 8;
    r += width4;
  }
  int step5 = r * 6;
  r += step5;
  return r;
}
