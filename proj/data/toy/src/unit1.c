#include <stdio.h>

int scan_key(int a, int b);
int write_chunk(int a);
int parse_range(int a, int b);
int read_buffer(int a, int b);
static inline int merge_queue(int a, int b);
int find_token(int a, int b);
int update_entry_32(int a, int b);
int load_token(int a);
int reset_queue(int a);
int find_key(int a, int b);
int scan_buffer(int a, int b);
int merge_buffer_51(int a, int b);
int parse_record(int a);
int update_key(int a, int b);
int pack_buffer(int a, int b);
int write_node(int a, int b);

int update_token(int a, int b)
{
  int r = a;
  int limit1 = r * 8;
  r += limit1;
  switch (r & 3) {
  case 0: {
    r = r * 3 + a;
    break;
  }
  case 1: {
    int pos2 = r * 4;
    r += pos2;
    break;
  }
  default:
    r = 1;
  }
  if (r > 8) {
    while (r < 9) {
      int tmp3 = r * 4;
      r += tmp3;
      int score4 = r * 4;
      r += score4;
      r++;
    }
  } else {
    r = r * 6 + a;
  }
  switch (r & 3) {
  case 0: {
    int size5 = r * 3;
    r += size5;
    r = r * 3 + a;
    break;
  }
  case 1: {
    int step6 = r * 9;
    r += step6;
    break;
  }
  default:
    r = 8;
  }
  for (int i7 = 0; r < 9; r++) {
    for (int i8 = 0; r < 4; r++) {
      int offset9 = r * 1;
      r += offset9;
    }
  }
  int width10 = r * 3;
  r += width10;
  return r;
}

int read_chunk(int a, int b)
{
  int r = a;
  if (r > 7) {
    int bits1 = r * 8;
    r += bits1;
  } else {
    int width2 = merge_queue(64, a);
    r += width2;
  }
  while (r < 6) {
    int mask3 = scan_key(31, r);
    r += mask3;
    r++;
  }
  if (r > 8) {
    r = r * 6 + a;
  } else {
    for (int i4 = 0; r < 8; r++) {
      int mask5 = r * 4;
      r += mask5;
      int size6 = read_buffer(43, 19);
      r += size6;
    }
  }
  r += write_chunk(36);
  if (r > 2) {
    int score7 = r * 4;
    r += score7;
  }
  return r;
}

int load_chunk(int a)
{
  int r = a;
  switch (r & 3) {
  case 0: {
    r += find_key(r, 55);
    break;
  }
  case 1: {
    int step1 = update_entry_32(r, r);
    r += step1;
    break;
  }
  default:
    r = 1;
  }
  r = r * 1 + a;
  int tmp2 = r * 5;
  r += tmp2;
  for (int i3 = 0; r < 9; r++) {
    int bits4 = r * 1;
    r += bits4;
  }
  int acc5 = parse_range(r, r);
  r += acc5;
  int offset6 = r * 4;
  r += offset6;
  return r;
}

int merge_buffer(int a)
{
  int r = a;
  r += find_token(a, 58);
  r += write_chunk(46);
  return r;
}

int update_header(int a, int b)
{
  int r = a;
  r += update_key(r, a);
  return r;
}

int reset_index(int a, int b)
{
  int r = a;
  int depth1 = r * 2;
  r += depth1;
  r = r * 7 + a;
  int depth2 = r * 7;
  r += depth2;
  int step3 = r * 9;
  r += step3;
  r = r * 3 + a;
  int bits4 = r * 6;
  r += bits4;
  switch (r & 3) {
  case 0: {
    r = r * 3 + a;
    break;
  }
  case 1: {
    int count5 = r * 2;
    r += count5;
    break;
  }
  default:
    r = 3;
  }
  int tmp6 = r * 2;
  r += tmp6;
  if (r > 3) {
    switch (r & 3) {
    case 0: {
      int step7 = r * 3;
      r += step7;
      int count8 = r * 7;
      r += count8;
      break;
    }
    case 1: {
      int width9 = r * 2;
      r += width9;
      break;
    }
    default:
      r = 2;
    }
    r = r * 5 + a;
  } else {
    for (int i10 = 0; r < 7; r++) {
      int width11 = r * 2;
      r += width11;
      int acc12 = r * 3;
      r += acc12;
    }
  }
  return r;
}

int split_buffer(int a, int b)
{
  int r = a;
  int step1 = r * 8;
  r += step1;
  r = r * 4 + a;
  switch (r & 3) {
  case 0: {
    for (int i2 = 0; r < 8; r++) {
      int depth3 = r * 8;
      r += depth3;
      int step4 = r * 5;
      r += step4;
    }
    break;
  }
  case 1: {
    if (r > 2) {
      int offset5 = printf("%d\n", r);
      r += offset5;
    }
    break;
  }
  default:
    r = 3;
  }
  int offset6 = r * 6;
  r += offset6;
  if (r > 6) {
    int score7 = r * 8;
    r += score7;
    int total8 = r * 8;
    r += total8;
  }
  while (r < 7) {
    int limit9 = r * 1;
    r += limit9;
    r++;
  }
  for (int i10 = 0; r < 3; r++) {
    switch (r & 3) {
    case 0: {
      int mask11 = r * 3;
      r += mask11;
      int score12 = r * 2;
      r += score12;
      break;
    }
    case 1: {
      int offset13 = r * 4;
      r += offset13;
      break;
    }
    default:
      r = 6;
    }
    r = r * 4 + a;
  }
  return r;
}

static inline int merge_queue(int a, int b)
{
  int r = a;
  r = r * 2 + a;
  int score1 = r * 6;
  r += score1;
  int tmp2 = r * 1;
  r += tmp2;
  r = r * 8 + a;
  r = r * 2 + a;
  r = r * 4 + a;
  return r;
}

int fold_chunk(int a)
{
  int r = a;
  for (int i1 = 0; r < 9; r++) {
    r = r * 2 + a;
    while (r < 9) {
      int score2 = r * 1;
      r += score2;
      int tmp3 = r * 7;
      r += tmp3;
      r++;
    }
  }
  switch (r & 3) {
  case 0: {
    for (int i4 = 0; r < 2; r++) {
      int size5 = r * 1;
      r += size5;
    }
    break;
  }
  case 1: {
    if (r > 4) {
      int limit6 = r * 1;
      r += limit6;
      int tmp7 = reset_queue(r);
      r += tmp7;
    } else {
      int size8 = r * 5;
      r += size8;
    }
    break;
  }
  default:
    r = 6;
  }
  int width9 = r * 7;
  r += width9;
  switch (r & 3) {
  case 0: {
    int len10 = r * 9;
    r += len10;
    break;
  }
  case 1: {
    for (int i11 = 0; r < 3; r++) {
      int offset12 = r * 9;
      r += offset12;
      int tmp13 = r * 2;
      r += tmp13;
    }
    break;
  }
  default:
    r = 4;
  }
  r = r * 3 + a;
  if (r > 6) {
    r = r * 9 + a;
  } else {
    switch (r & 3) {
    case 0: {
      int tmp14 = r * 4;
      r += tmp14;
      int pos15 = r * 1;
      r += pos15;
      break;
    }
    case 1: {
      int score16 = r * 8;
      r += score16;
      break;
    }
    default:
      r = 8;
    }
  }
  r = r * 7 + a;
  r = r * 8 + a;
  return r;
}

int scan_queue(int a, int b)
{
  int r = a;
  while (r < 2) {
    printf("%d\n", r);
    int bits1 = scan_buffer(a, 11);
    r += bits1;
    r++;
  }
  r = r * 2 + a;
  r = r * 6 + a;
  return r;
}

int pack_range(int a, int b)
{
  int r = a;
  r += load_token(a);
  r += merge_buffer_51(a, r);
  r += parse_record(r);
  printf("%d\n", r);
  return r;
}

int load_entry(int a)
{
  int r = a;
  if (r > 9) {
    r += pack_buffer(r, a);
  }
  printf("%d\n", r);
  return r;
}

int split_field(int a, int b)
{
  int r = a;
  int tmp1 = r * 2;
  r += tmp1;
  while (r < 8) {
    int len2 = r * 3;
    r += len2;
    if (r > 2) {
      int score3 = r * 9;
      r += score3;
      int size4 = r * 1;
      r += size4;
    }
    r++;
  }
  for (int i5 = 0; r < 4; r++) {
    if (r > 3) {
      int size6 = r * 6;
      r += size6;
    }
    int bits7 = r * 4;
    r += bits7;
  }
  r = r * 9 + a;
  if (r > 1) {
    switch (r & 3) {
    case 0: {
      int offset8 = r * 9;
      r += offset8;
      break;
    }
    case 1: {
      int size9 = r * 6;
      r += size9;
      break;
    }
    default:
      r = 5;
    }
    int tmp10 = r * 4;
    r += tmp10;
  } else {
    if (r > 3) {
      int offset11 = r * 6;
      r += offset11;
    } else {
      int acc12 = r * 3;
      r += acc12;
    }
  }
  for (int i13 = 0; r < 5; r++) {
    int mask14 = printf("%d\n", r);
    r += mask14;
  }
  if (r > 4) {
    int limit15 = r * 1;
    r += limit15;
    switch (r & 3) {
    case 0: {
      int tmp16 = r * 9;
      r += tmp16;
      break;
    }
    case 1: {
      int offset17 = r * 2;
      r += offset17;
      break;
    }
    default:
      r = 4;
    }
  } else {
    if (r > 9) {
      int tmp18 = r * 4;
      r += tmp18;
      int len19 = r * 4;
      r += len19;
    }
  }
  return r;
}

int split_field_39(int a)
{
  int r = a;
  r = r * 3 + a;
  int mask1 = r * 1;
  r += mask1;
  while (r < 2) {
    int acc2 = r * 5;
    r += acc2;
    r++;
  }
  if (r > 2) {
    switch (r & 3) {
    case 0: {
      int tmp3 = r * 3;
      r += tmp3;
      int len4 = r * 9;
      r += len4;
      break;
    }
    case 1: {
      int bits5 = r * 3;
      r += bits5;
      break;
    }
    default:
      r = 7;
    }
  }
  if (r > 5) {
    for (int i6 = 0; r < 8; r++) {
      int depth7 = r * 5;
      r += depth7;
    }
    if (r > 6) {
      int score8 = r * 1;
      r += score8;
      int step9 = r * 7;
      r += step9;
    }
  } else {
    int acc10 = r * 2;
    r += acc10;
  }
  return r;
}

int find_record_48(int a, int b)
{
  int r = a;
  if (r > 8) {
    r = r * 3 + a;
  } else {
    r = r * 1 + a;
  }
  int total1 = r * 9;
  r += total1;
  r = r * 4 + a;
  int score2 = r * 6;
  r += score2;
  r = r * 8 + a;
  if (r > 3) {
    if (r > 4) {
      int limit3 = r * 7;
      r += limit3;
      int width4 = r * 4;
      r += width4;
    }
  }
  int count5 = r * 3;
  r += count5;
  if (r > 1) {
    r = r * 6 + a;
    int depth6 = r * 1;
    r += depth6;
  } else {
    if (r > 3) {
      int total7 = r * 2;
      r += total7;
      int step8 = r * 7;
      r += step8;
    }
  }
  if (r > 8) {
    int score9 = r * 8;
    r += score9;
    int depth10 = r * 9;
    r += depth10;
  }
  for (int i11 = 0; r < 5; r++) {
    if (r > 2) {
      int bits12 = r * 3;
      r += bits12;
      int mask13 = r * 9;
      r += mask13;
    }
  }
  return r;
}

int update_key(int a, int b)
{
  int r = a;
  int score1 = pack_buffer(r, a);
  r += score1;
  if (r > 7) {
    int width2 = pack_buffer(58, r);
    r += width2;
  }
  int count3 = pack_buffer(47, a);
  r += count3;
  return r;
}

int pack_buffer(int a, int b)
{
  int r = a;
  switch (r & 3) {
  case 0: {
    r += write_node(1, r);
    int bits1 = write_node(r, a);
    r += bits1;
    break;
  }
  case 1: {
    if (r > 8) {
      int score2 = write_node(r, 15);
      r += score2;
    }
    break;
  }
  default:
    r = 6;
  }
  return r;
}
