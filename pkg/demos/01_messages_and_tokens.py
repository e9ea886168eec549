"""Walk through message parsing and tokenization.

Shows the header/body split, continuation-line folding, and the token rules
(lowercase alphanumeric runs, lengths 2..40).
"""

from sievekit import parse_message, render_message, tokenize

RAW = b"""\
From: promotions@example.test
Subject: You WON!!
X-Campaign: summer
 blast-42

Claim your FREE $500 casino bonus NOW.
Visit example.test/win within 24h!
"""

msg = parse_message(RAW, message_id="demo-1")
print("headers:")
for name, value in msg.headers:
    print(f"  {name} = {value!r}")
print("subject:", repr(msg.subject))
print("body:", repr(msg.body))

print("\nround trip is stable:", parse_message(render_message(msg), "demo-1") == msg)

print("\ntokens over subject+body:")
print(" ", tokenize(msg))
print("tokens over the subject alone:")
print(" ", tokenize(msg, fields=("subject",)))

# a line that is not a header ends the header block and becomes body
odd = parse_message(b"not a header line\nSubject: too late\n")
print("\nmessage with no valid header block:")
print("  headers:", odd.headers)
print("  body starts with:", repr(odd.body.splitlines()[0]))
